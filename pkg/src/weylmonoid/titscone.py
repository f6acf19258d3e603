"""Points of the Tits cone, facets and faces.

A point is stored by its coroot values (lam(h_1), ..., lam(h_n)) as exact
fractions.  A face w.R(Theta) is stored by (Theta, w) with w minimal in
w.W_{Theta u Theta-perp}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

import sympy

from .coxeter import WeylElem, WeylGroup, word_str
from .errors import NotSpecial, PointNotInCone
from .gcm import AFFINE, FINITE

IN_X = "InX"
NOT_IN_X = "NotInX"
UNKNOWN = "Unknown"

EXACT = "Exact"
BOUNDED = "BoundedConfidence"

DEFAULT_DESCENT_CAP = 10**4
DEFAULT_FACE_BUDGET = 4


@dataclass(frozen=True)
class ConePoint:
    values: tuple

    @classmethod
    def of(cls, values: Iterable) -> ConePoint:
        return cls(tuple(Fraction(v) for v in values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def __add__(self, other: ConePoint) -> ConePoint:
        return ConePoint(tuple(a + b for a, b in zip(self.values, other.values)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def reflect_point(group: WeylGroup, j: int, lam: ConePoint) -> ConePoint:
    """sigma_j: value_i <- value_i - a_ij value_j."""
    vj = lam.values[j]
    if vj == 0:
        return lam
    a = group.gcm.entries
    return ConePoint(tuple(v - a[i][j] * vj for i, v in enumerate(lam.values)))


def apply_weyl(w: WeylElem, lam: ConePoint) -> ConePoint:
    mat = w.coweight_matrix()
    return ConePoint(tuple(
        sum(c * v for c, v in zip(row, lam.values) if c) for row in mat
    ))


def indicator(n: int, support: Iterable[int]) -> ConePoint:
    support = frozenset(support)
    return ConePoint(tuple(Fraction(int(i in support)) for i in range(n)))


@dataclass(frozen=True)
class Membership:
    status: str
    w: WeylElem | None = None
    facet_type: frozenset | None = None
    reason: str = ""

    @property
    def in_x(self) -> bool:
        return self.status == IN_X


@dataclass(frozen=True)
class Facet:
    type_J: frozenset
    rep: WeylElem

    def __str__(self) -> str:
        return f"{word_str(self.rep.word)} · F({_set_str(self.type_J)})"


@dataclass(frozen=True)
class Face:
    theta: frozenset
    rep: WeylElem

    def __str__(self) -> str:
        return f"{word_str(self.rep.word)} · R({_set_str(self.theta)})"

    def sort_key(self) -> tuple:
        return (sorted(self.theta), self.rep.sort_key())


def _set_str(s: Iterable[int]) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"


def _certificates(group: WeylGroup) -> list[tuple[frozenset, tuple, str]]:
    """Coroot combinations h = sum c_i h_i whose value is >= 0 on all of X.

    Each entry is (support, coefficients, kind); kind 'level' marks the
    central element of an affine component, whose value is W-invariant.
    """
    key = ("cone-certificates",)
    if key in group.memo:
        return group.memo[key]
    gcm = group.gcm
    n = gcm.n
    a = gcm.entries
    out = []
    seen = set()
    for k in range(2, n + 1):
        for sub in _connected_subsets(gcm, k):
            kind = gcm.classify(sub)
            if kind == FINITE:
                continue
            idx = sorted(sub)
            cands = []
            if kind == AFFINE:
                ns = sympy.Matrix([[a[i][j] for i in idx] for j in idx]).nullspace()
                vec = ns[0]
                vec = vec * sympy.ilcm(*[x.q for x in vec])
                if vec[0] < 0:
                    vec = -vec
                cands.append((tuple(int(x) for x in vec), "affine"))
            cands.append((tuple(1 for _ in idx), "ones"))
            for coefs, tag in cands:
                c = [0] * n
                for i, v in zip(idx, coefs):
                    c[i] = v
                if min(coefs) <= 0:
                    continue
                # sum_i c_i a_ij <= 0 for all j puts h in the imaginary coroot cone
                if all(sum(c[i] * a[i][j] for i in range(n)) <= 0 for j in range(n)):
                    if tuple(c) not in seen:
                        seen.add(tuple(c))
                        is_level = tag == "affine" and sub in {comp for comp, _ in gcm.components}
                        out.append((frozenset(sub), tuple(c), "level" if is_level else "cone"))
    group.memo[key] = out
    return out


def _connected_subsets(gcm, k: int):
    from itertools import combinations

    for c in combinations(range(gcm.n), k):
        if len(gcm.connected_components(c)) == 1:
            yield frozenset(c)


def _pair(c: tuple, lam: ConePoint) -> Fraction:
    return sum(ci * v for ci, v in zip(c, lam.values) if ci)


def _not_in_x_reason(group: WeylGroup, lam: ConePoint, certs) -> str:
    for sub, c, kind in certs:
        val = _pair(c, lam)
        if val < 0:
            return f"negative value {val} on an imaginary coroot supported on {_set_str(sub)}"
        if kind == "level" and val == 0 and any(lam.values[i] for i in sub):
            return f"level zero but nonzero point on affine component {_set_str(sub)}"
    for comp, kind in group.gcm.components:
        if kind == FINITE:
            continue
        vals = [lam.values[i] for i in comp]
        if all(v <= 0 for v in vals) and any(v < 0 for v in vals):
            return f"nonzero antidominant projection on component {_set_str(comp)}"
    return ""


def tits_membership(group: WeylGroup, lam: ConePoint, cap: int = DEFAULT_DESCENT_CAP) -> Membership:
    """Decide lam in X by descent to the fundamental chamber.

    On success ``lam = w . mu`` with mu dominant and ``facet_type`` the zero set of mu.
    """
    certs = _certificates(group)
    steps = []
    cur = lam
    while True:
        neg = [i for i, v in enumerate(cur.values) if v < 0]
        if not neg:
            w = group.from_word(steps)
            J = frozenset(i for i, v in enumerate(cur.values) if v == 0)
            return Membership(IN_X, w, J)
        reason = _not_in_x_reason(group, cur, certs)
        if reason:
            return Membership(NOT_IN_X, reason=reason)
        if len(steps) >= cap:
            return Membership(UNKNOWN, reason=f"descent cap {cap} reached")
        i = neg[0]
        steps.append(i)
        cur = reflect_point(group, i, cur)


def facet_of(group: WeylGroup, lam: ConePoint, cap: int = DEFAULT_DESCENT_CAP) -> Facet:
    m = tits_membership(group, lam, cap)
    if not m.in_x:
        raise PointNotInCone(f"{lam}: {m.status} {m.reason}".strip())
    return Facet(m.facet_type, group.coset_min(m.w, m.facet_type, "right"))


def make_face(group: WeylGroup, theta: Iterable[int], rep: WeylElem | None = None) -> Face:
    theta = frozenset(theta)
    if not group.gcm.is_special(theta):
        raise NotSpecial(f"{_set_str(theta)} is not special")
    rep = group.identity if rep is None else rep
    stab = theta | group.gcm.theta_perp(theta)
    return Face(theta, group.coset_min(rep, stab, "right"))


def face_generated(group: WeylGroup, facet: Facet) -> Face:
    theta = group.gcm.non_finite_part(facet.type_J)
    return make_face(group, theta, facet.rep)


def relint_point(group: WeylGroup, face: Face) -> ConePoint:
    """rep applied to the indicator of I minus Theta."""
    return apply_weyl(face.rep, indicator(group.n, group.gcm.index_set - face.theta))


def in_face(group: WeylGroup, face: Face, lam: ConePoint) -> bool:
    """lam in face, assuming lam in X."""
    q = apply_weyl(face.rep.inverse(), lam)
    return all(q.values[i] == 0 for i in face.theta)


def face_contains(group: WeylGroup, f1: Face, f2: Face) -> bool:
    """True iff f2 is a subset of f1."""
    if f1 == f2:
        return True
    return in_face(group, f1, relint_point(group, f2))


def face_constraints(group: WeylGroup, face: Face) -> list[tuple]:
    """Rows r with lam in span(face) iff r.lam = 0 for each row."""
    mat = face.rep.inverse().coweight_matrix()
    return [mat[i] for i in sorted(face.theta)]


def _span_basis(rows: list[tuple], n: int) -> list[tuple]:
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    ns = sympy.Matrix(rows).nullspace()
    out = []
    for v in ns:
        v = v * sympy.ilcm(1, *[x.q for x in v])
        g = sympy.igcd(*[int(x) for x in v]) or 1
        out.append(tuple(int(x) // g for x in v))
    return out


def _contains_span(rows: list[tuple], basis: list[tuple]) -> bool:
    return all(sum(r[k] * b[k] for k in range(len(b))) == 0 for r in rows for b in basis)


def sample_schedule(dim: int, budget: int):
    """Coefficient vectors in a fixed order: max-norm 1, 2, ..., budget."""
    for k in range(1, budget + 1):
        layer = [
            c for c in product(range(-k, k + 1), repeat=dim) if max(abs(x) for x in c) == k
        ]
        layer.sort(key=lambda c: (sum(abs(x) for x in c), sum(1 for x in c if x < 0), tuple(-x for x in c)))
        yield from layer


def face_intersect(
    group: WeylGroup,
    f1: Face,
    f2: Face,
    budget: int = DEFAULT_FACE_BUDGET,
    cap: int = DEFAULT_DESCENT_CAP,
) -> tuple[Face, str]:
    """The face f1 n f2 together with an exactness tag."""
    if f1 == f2 or face_contains(group, f2, f1):
        return f1, EXACT
    if face_contains(group, f1, f2):
        return f2, EXACT
    a, b = sorted((f1, f2), key=Face.sort_key)
    key = ("face-intersect", a, b, budget, cap)
    if key in group.memo:
        return group.memo[key]
    n = group.n
    basis = _span_basis(face_constraints(group, a) + face_constraints(group, b), n)
    total = ConePoint.of([0] * n)
    cand = face_generated(group, facet_of(group, total, cap))
    result = None
    if _contains_span(face_constraints(group, cand), basis):
        result = (cand, EXACT)
    else:
        for coefs in sample_schedule(len(basis), budget):
            p = ConePoint.of(sum(c * v[k] for c, v in zip(coefs, basis)) for k in range(n))
            if not tits_membership(group, p, cap).in_x:
                continue
            total = total + p
            cand = face_generated(group, facet_of(group, total, cap))
            if _contains_span(face_constraints(group, cand), basis):
                result = (cand, EXACT)
                break
        if result is None:
            result = (cand, BOUNDED)
    group.memo[key] = result
    return result


def special_faces_up_to(group: WeylGroup, radius: int) -> list[Face]:
    """Faces w.R(Theta) for every special Theta and minimal w of length <= radius."""
    out = []
    for theta in group.gcm.special_subsets():
        stab = theta | group.gcm.theta_perp(theta)
        for w in group.ball(radius):
            if not (w.right_descents() & stab):
                out.append(Face(theta, w))
    return out
