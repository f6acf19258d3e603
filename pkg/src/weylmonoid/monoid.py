"""Weyl monoid elements in normal form III, products, inverse map and action.

An element is stored as (Theta, w1, w2, w3) meaning w1 w2 e(R(Theta)) w3 with
w1 minimal in w1.W_{Theta u Theta-perp}, w2 in W_{Theta-perp} and w3 minimal in
W_{Theta u Theta-perp}.w3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coxeter import WeylElem, WeylGroup, word_str
from .errors import NotSpecial, PointNotInCone
from .titscone import (
    BOUNDED,
    DEFAULT_DESCENT_CAP,
    DEFAULT_FACE_BUDGET,
    EXACT,
    ConePoint,
    _set_str,
    apply_weyl,
    face_intersect,
    make_face,
    tits_membership,
)

ANNIHILATED = "Annihilated"


@dataclass(frozen=True)
class MonoidElem:
    theta: frozenset
    w1: WeylElem
    w2: WeylElem
    w3: WeylElem

    @property
    def group(self) -> WeylGroup:
        return self.w1.group

    @property
    def is_unit(self) -> bool:
        return not self.theta

    @property
    def is_idempotent(self) -> bool:
        return self.w1.is_identity and self.w2.is_identity and self.w3.is_identity

    @property
    def nf1(self) -> tuple[WeylElem, WeylElem]:
        """(w1 w2, w3): first part in W^Theta, second in ^{Theta u Theta-perp}W."""
        return (self.w1 * self.w2, self.w3)

    @property
    def nf2(self) -> tuple[WeylElem, WeylElem]:
        """(w1, w2 w3): first part in W^{Theta u Theta-perp}, second in ^Theta W."""
        return (self.w1, self.w2 * self.w3)

    @property
    def as_unit(self) -> WeylElem:
        if self.theta:
            raise ValueError("element is not a unit")
        return self.w2

    def sort_key(self) -> tuple:
        l = self.w1.length + self.w2.length + self.w3.length
        return (l, len(self.theta), sorted(self.theta),
                self.w1.sort_key(), self.w2.sort_key(), self.w3.sort_key())

    def __str__(self) -> str:
        return format_nf3(self)

    def __repr__(self) -> str:
        return f"MonoidElem({format_nf3(self)})"


def format_nf3(m: MonoidElem) -> str:
    return f"{word_str(m.w1.word)} | {word_str(m.w2.word)} | e({_set_str(m.theta)}) | {word_str(m.w3.word)}"


def format_two_part(a: WeylElem, theta: frozenset, b: WeylElem) -> str:
    return f"{word_str(a.word)} · e({_set_str(theta)}) · {word_str(b.word)}"


def format_expression(m: MonoidElem) -> str:
    """Rendering in the element grammar; parses back to ``m``."""
    parts = []
    if m.w1.word or m.w2.word:
        parts.append(word_str((m.w1 * m.w2).word))
    if m.theta:
        parts.append("e(" + ",".join(str(i + 1) for i in sorted(m.theta)) + ")")
    if m.w3.word:
        parts.append(word_str(m.w3.word))
    return " ".join(parts) if parts else "e()"


def _stab(group: WeylGroup, theta: frozenset) -> tuple[frozenset, frozenset]:
    perp = group.gcm.theta_perp(theta)
    return perp, theta | perp


def from_parts(u: WeylElem, theta: Iterable[int], v: WeylElem) -> MonoidElem:
    """Canonical form of u . e(R(Theta)) . v."""
    group = u.group
    theta = frozenset(theta)
    if not group.gcm.is_special(theta):
        raise NotSpecial(f"{_set_str(theta)} is not special")
    perp, stab = _stab(group, theta)
    u1 = group.coset_min(u, stab, "right")
    p = u1.inverse() * u
    p_perp = group.from_word([i for i in p.word if i in perp])
    x = p_perp * v
    r = group.coset_min(x, stab, "left")
    q = x * r.inverse()
    q_perp = group.from_word([i for i in q.word if i in perp])
    return MonoidElem(theta, u1, q_perp, r)


def unit(w: WeylElem) -> MonoidElem:
    e = w.group.identity
    return MonoidElem(frozenset(), e, w, e)


def idempotent(group: WeylGroup, theta: Iterable[int]) -> MonoidElem:
    e = group.identity
    return from_parts(e, theta, e)


def zero(group: WeylGroup) -> MonoidElem:
    """The zero element e(R(I)); requires the whole index set to be special."""
    return idempotent(group, group.gcm.index_set)


def lmul_gen(i: int, m: MonoidElem) -> MonoidElem:
    """sigma_i . m (always exact)."""
    return from_parts((m.w1 * m.w2).lmul(i), m.theta, m.w3)


def rmul_gen(m: MonoidElem, i: int) -> MonoidElem:
    """m . sigma_i (always exact)."""
    return from_parts(m.w1, m.theta, (m.w2 * m.w3).rmul(i))


def multiply(
    m1: MonoidElem,
    m2: MonoidElem,
    budget: int = DEFAULT_FACE_BUDGET,
    cap: int = DEFAULT_DESCENT_CAP,
) -> tuple[MonoidElem, str]:
    group = m1.group
    if m1.is_unit:
        return from_parts(m1.w2 * m2.w1 * m2.w2, m2.theta, m2.w3), EXACT
    if m2.is_unit:
        return from_parts(m1.w1 * m1.w2, m1.theta, m1.w3 * m2.w2), EXACT
    key = ("multiply", m1, m2, budget, cap)
    if key in group.memo:
        return group.memo[key]
    t1, t2 = m1.theta, m2.theta
    perp1, stab1 = _stab(group, t1)
    perp2, stab2 = _stab(group, t2)
    a = m1.w1 * m1.w2
    v = m1.w3 * m2.w1 * m2.w2
    d = m2.w3
    # a e(t1) v e(t2) d: absorb W_t letters, move W_{t-perp} letters outward
    while True:
        dl = v.left_descents() & stab1
        if dl:
            s = min(dl)
            if s in perp1:
                a = a.rmul(s)
            v = v.lmul(s)
            continue
        dr = v.right_descents() & stab2
        if dr:
            s = min(dr)
            if s in perp2:
                d = d.lmul(s)
            v = v.rmul(s)
            continue
        break
    if v.is_identity:
        result = (from_parts(a, t1 | t2, d), EXACT)
    else:
        face, tag = face_intersect(
            group, make_face(group, t1), make_face(group, t2, v), budget, cap
        )
        u = face.rep
        result = (from_parts(a * u, face.theta, u.inverse() * v * d), tag)
    group.memo[key] = result
    return result


def multiply_all(
    elems: Sequence[MonoidElem],
    budget: int = DEFAULT_FACE_BUDGET,
    cap: int = DEFAULT_DESCENT_CAP,
) -> tuple[MonoidElem, str]:
    it = iter(elems)
    acc = next(it)
    tag = EXACT
    for m in it:
        acc, t = multiply(acc, m, budget, cap)
        if t != EXACT:
            tag = BOUNDED
    return acc, tag


def inverse(m: MonoidElem) -> MonoidElem:
    return from_parts(m.w3.inverse() * m.w2.inverse(), m.theta, m.w1.inverse())


def act(m: MonoidElem, lam: ConePoint, cap: int = DEFAULT_DESCENT_CAP):
    """Image of lam under m, or ANNIHILATED when lam leaves the face."""
    if not tits_membership(m.group, lam, cap).in_x:
        raise PointNotInCone(f"{lam} is not certified to lie in the Tits cone")
    return act_unchecked(m, lam)


def act_unchecked(m: MonoidElem, lam: ConePoint):
    x = apply_weyl(m.w3, lam)
    if any(x.values[i] for i in m.theta):
        return ANNIHILATED
    return apply_weyl(m.w1 * m.w2, x)


def orbit_ball(group: WeylGroup, theta: Iterable[int], radius: int) -> list[MonoidElem]:
    """Elements of W e(R(Theta)) W with l_mp <= radius."""
    theta = frozenset(theta)
    if not group.gcm.is_special(theta):
        raise NotSpecial(f"{_set_str(theta)} is not special")
    perp, stab = _stab(group, theta)
    ball = group.ball(radius)
    left = [w for w in ball if not (w.right_descents() & stab)]
    right = [w for w in ball if not (w.left_descents() & stab)]
    middle = group.ball(radius, perp)
    out = []
    for w1 in left:
        for w2 in middle:
            if w1.length + w2.length > radius:
                break
            for w3 in right:
                if w1.length + w2.length + w3.length > radius:
                    break
                out.append(MonoidElem(theta, w1, w2, w3))
    out.sort(key=MonoidElem.sort_key)
    return out


def monoid_ball(group: WeylGroup, radius: int) -> list[MonoidElem]:
    """All monoid elements with l_mp <= radius, sorted canonically."""
    out = []
    for theta in group.gcm.special_subsets():
        out.extend(orbit_ball(group, theta, radius))
    out.sort(key=MonoidElem.sort_key)
    return out
