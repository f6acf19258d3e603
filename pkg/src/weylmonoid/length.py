"""Extended length functions and their change under simple reflections."""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import NEGATIVE, POSITIVE, RootVector, simple_root
from .monoid import MonoidElem, lmul_gen, rmul_gen

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class LengthTriple:
    l_pp: int
    l_mm: int
    l_mp: int

    def get(self, kind: str) -> int:
        return {"pp": self.l_pp, "mm": self.l_mm, "mp": self.l_mp}[kind]

    def __sub__(self, other: LengthTriple) -> LengthTriple:
        return LengthTriple(self.l_pp - other.l_pp, self.l_mm - other.l_mm, self.l_mp - other.l_mp)

    def __str__(self) -> str:
        return f"{self.l_pp} / {self.l_mm} / {self.l_mp}"


def lengths(m: MonoidElem) -> LengthTriple:
    a, b, c = m.w1.length, m.w2.length, m.w3.length
    return LengthTriple(a + b - c, -a + b + c, a + b + c)


def root_class(m: MonoidElem, beta: RootVector) -> str:
    """Classify a real root against Theta and Theta-perp of m.

    Returns 'absorbed' (in W_Theta Theta), 'perp' (support in Theta-perp) or
    'free' (support outside Theta u Theta-perp).  A real root has connected
    support, so these are exhaustive.
    """
    group = m.group
    theta = m.theta
    perp = group.gcm.theta_perp(theta)
    supp = beta.support
    if theta and supp <= theta:
        return "absorbed"
    if supp <= perp:
        return "perp"
    return "free"


def _table_a(sign: str, cls: str) -> int:
    # +1 on positive roots, -1 on negative ones, 0 when absorbed.
    if cls == "absorbed":
        return 0
    return 1 if sign == POSITIVE else -1


def _table_b(sign: str, cls: str) -> int:
    # Outside Theta u Theta-perp the sign flips; inside Theta-perp it does not.
    if cls == "absorbed":
        return 0
    if cls == "perp":
        return 1 if sign == POSITIVE else -1
    return 1 if sign == NEGATIVE else -1


def delta_root(side: str, i: int, m: MonoidElem) -> RootVector:
    group = m.group
    if side == LEFT:
        w1, _ = m.nf1
        return group.act_on_root(w1.inverse(), simple_root(group.n, i))
    if side == RIGHT:
        _, w2 = m.nf2
        return group.act_on_root(w2, simple_root(group.n, i))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def length_delta(side: str, i: int, m: MonoidElem, kind: str) -> int:
    """Change of l_kind when m is multiplied by sigma_i on the given side."""
    beta = delta_root(side, i, m)
    cls = root_class(m, beta)
    sign = beta.sign
    uses_b = (side == LEFT and kind == "mm") or (side == RIGHT and kind == "pp")
    if kind not in ("pp", "mm", "mp"):
        raise ValueError(f"unknown length kind {kind!r}")
    return _table_b(sign, cls) if uses_b else _table_a(sign, cls)


def act_gen(side: str, i: int, m: MonoidElem) -> MonoidElem:
    return lmul_gen(i, m) if side == LEFT else rmul_gen(m, i)
