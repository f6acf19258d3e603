"""Symbolic Bruhat and Birkhoff cells B^eps m B^delta.

Cells are labels only: the closure order is decided by the extended Bruhat
orders and factor descriptors are finite root-set data.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import NEGATIVE, POSITIVE, RootVector, word_str
from .errors import SignMismatch
from .length import LEFT, RIGHT, length_delta
from .monoid import MonoidElem, format_nf3, lmul_gen, rmul_gen
from .order import leq_mm, leq_mp, leq_pp

PLUS_PLUS = ("+", "+")
MINUS_MINUS = ("-", "-")
MINUS_PLUS = ("-", "+")
SIGN_PAIRS = (PLUS_PLUS, MINUS_MINUS, MINUS_PLUS)

DEFAULT_HEIGHT_CAP = 8


@dataclass(frozen=True)
class CellLabel:
    signs: tuple
    elem: MonoidElem

    def __post_init__(self):
        if self.signs not in SIGN_PAIRS:
            raise SignMismatch(f"unsupported cell signs {self.signs}")

    def __str__(self) -> str:
        eps, delta = self.signs
        return f"B^{eps} · <{format_nf3(self.elem)}> · B^{delta}"


def closure_leq(c: CellLabel, d: CellLabel) -> bool:
    """True iff cell c lies in the closure of cell d."""
    if c.signs != d.signs:
        raise SignMismatch(f"cannot compare {c.signs} with {d.signs}")
    if c.signs == PLUS_PLUS:
        return leq_pp(c.elem, d.elem).holds
    if c.signs == MINUS_MINUS:
        return leq_mm(c.elem, d.elem).holds
    # For B^- m B the order is reversed: larger elements have smaller cells.
    return leq_mp(d.elem, c.elem).holds


@dataclass(frozen=True)
class TitsProduct:
    case: str  # "unchanged" | "moved" | "union"
    delta: int
    cells: tuple


SAME, MIXED = "same", "mixed"


def tits_product(side: str, shape: str, eps: str, i: int, m: MonoidElem) -> TitsProduct:
    """Cells making up a product of a simple-reflection cell with the cell of m.

    ``shape='same'`` multiplies (B^eps s_i B^eps) with (B^eps m B^eps) on the
    given side.  ``shape='mixed'`` is the twinned shape; only the combinations
    landing in B^- m B are supported (left with eps='+', right with eps='-').
    The case is selected by the change of l_{eps eps}.
    """
    if side not in (LEFT, RIGHT) or shape not in (SAME, MIXED) or eps not in ("+", "-"):
        raise ValueError(f"bad product configuration {(side, shape, eps)}")
    kind = "pp" if eps == "+" else "mm"
    if shape == SAME:
        signs = (eps, eps)
    else:
        signs = ("-" if eps == "+" else "+", eps) if side == LEFT else (eps, "-" if eps == "+" else "+")
        if signs != MINUS_PLUS:
            raise SignMismatch(f"product shape lands in B^{signs[0]} . B^{signs[1]} cells, which are not modelled")
    delta = length_delta(side, i, m, kind)
    moved = lmul_gen(i, m) if side == LEFT else rmul_gen(m, i)
    here, there = CellLabel(signs, m), CellLabel(signs, moved)
    grow = 1 if shape == SAME else -1
    if delta == 0:
        return TitsProduct("unchanged", delta, (here,))
    if delta == grow:
        return TitsProduct("moved", delta, (there,))
    return TitsProduct("union", delta, (there, here))


@dataclass(frozen=True)
class FactorDescriptor:
    signs: tuple
    left_roots: tuple
    torus_theta: frozenset
    torus_conjugator: object
    right_roots: tuple
    height_cap: int
    left_is_window: bool
    right_is_window: bool

    def to_record(self) -> dict:
        def roots(rs):
            return [list(r.coords) for r in rs]

        return {
            "signs": "".join(self.signs),
            "left_roots": roots(self.left_roots),
            "left_is_window": self.left_is_window,
            "torus_theta": [i + 1 for i in sorted(self.torus_theta)],
            "torus_conjugator": word_str(self.torus_conjugator.word),
            "right_roots": roots(self.right_roots),
            "right_is_window": self.right_is_window,
            "height_cap": self.height_cap,
        }


def _outside_span(beta: RootVector, theta: frozenset) -> bool:
    return not beta.support <= theta


def _positive_window(m: MonoidElem, w2, cap: int) -> tuple:
    """Positive real roots b with w2 b positive and outside the span of Theta."""
    group = m.group
    out = []
    for beta in group.positive_real_roots(cap):
        image = group.act_on_root(w2, beta)
        if image.sign == POSITIVE and _outside_span(image, m.theta):
            out.append(beta)
    return tuple(out)


def _negative_window(m: MonoidElem, w1, cap: int) -> tuple:
    """Negative real roots b with w1^-1 b negative and outside the span of Theta."""
    group = m.group
    inv = w1.inverse()
    out = []
    for gamma in group.positive_real_roots(cap):
        beta = -gamma
        image = group.act_on_root(inv, beta)
        if image.sign == NEGATIVE and _outside_span(image, m.theta):
            out.append(beta)
    return tuple(out)


def cell_factors(m: MonoidElem, signs: tuple, height_cap: int = DEFAULT_HEIGHT_CAP) -> FactorDescriptor:
    group = m.group
    if signs == PLUS_PLUS:
        w1, w2 = m.nf1
        return FactorDescriptor(
            signs, tuple(group.inversion_set(w1)), m.theta, w2,
            _positive_window(m, w2, height_cap), height_cap, False, True,
        )
    if signs == MINUS_MINUS:
        w1, w2 = m.nf2
        right = tuple(-b for b in group.inversion_set(w2.inverse()))
        return FactorDescriptor(
            signs, _negative_window(m, w1, height_cap), m.theta, w1,
            right, height_cap, True, False,
        )
    if signs == MINUS_PLUS:
        w1, w2 = m.nf1
        return FactorDescriptor(
            signs, _negative_window(m, w1, height_cap), m.theta, w2,
            _positive_window(m, w2, height_cap), height_cap, True, True,
        )
    raise SignMismatch(f"unsupported cell signs {signs}")
