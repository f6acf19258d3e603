"""Invariant suites over enumerated balls.

Each suite returns a :class:`CheckResult`; ``violations`` is empty when the
invariant holds everywhere on the tested range.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from .cells import MIXED, SAME, CellLabel, closure_leq, tits_product
from .coxeter import WeylGroup
from .length import LEFT, RIGHT, act_gen, delta_root, length_delta, lengths
from .monoid import (
    ANNIHILATED,
    MonoidElem,
    act_unchecked,
    from_parts,
    inverse,
    monoid_ball,
    multiply,
    orbit_ball,
    unit,
)
from .order import (
    KINDS,
    MM,
    MP,
    PP,
    check_axioms,
    check_mp_witness,
    check_pp_witness,
    hasse_graph,
    leq_mm_direct,
    leq_mp,
    leq_mp_exhaustive,
    leq_pp,
    leq_pp_exhaustive,
    longest_chain_lengths,
    relation_matrix,
)
from .titscone import (
    EXACT,
    ConePoint,
    apply_weyl,
    face_contains,
    face_intersect,
    indicator,
    make_face,
    special_faces_up_to,
)

MAX_REPORTED = 10


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def fail(self, item) -> None:
        if len(self.violations) < MAX_REPORTED:
            self.violations.append(item)
        else:
            self.notes["unreported_violations"] = self.notes.get("unreported_violations", 0) + 1

    def to_record(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "violations": [str(v) for v in self.violations],
            "notes": self.notes,
        }


class BallContext:
    """A monoid ball with cached relation matrices."""

    def __init__(self, group: WeylGroup, radius: int):
        self.group = group
        self.radius = radius
        self.elems = monoid_ball(group, radius)
        self.index = {m: k for k, m in enumerate(self.elems)}
        self._rel: dict[str, np.ndarray] = {}

    def rel(self, kind: str) -> np.ndarray:
        if kind not in self._rel:
            if kind == "mm-direct":
                self._rel[kind] = _direct_mm_matrix(self.elems)
            else:
                self._rel[kind] = relation_matrix(self.elems, kind)
        return self._rel[kind]

    def inverse_permutation(self) -> np.ndarray:
        return np.array([self.index[inverse(m)] for m in self.elems])


def _direct_mm_matrix(elems: Sequence[MonoidElem]) -> np.ndarray:
    size = len(elems)
    rel = np.zeros((size, size), dtype=bool)
    for a, m in enumerate(elems):
        for b, n in enumerate(elems):
            if m.theta >= n.theta:
                rel[a, b] = leq_mm_direct(m, n).holds
    return rel


def order_axioms(ctx: BallContext) -> CheckResult:
    res = CheckResult("order-axioms")
    for kind in (PP, MM, MP, "mm-direct"):
        rep = check_axioms(ctx.rel(kind))
        res.checked += len(ctx.elems) ** 2
        res.notes[kind] = {
            "reflexive": rep.reflexive_failures,
            "antisymmetric": rep.antisymmetric_failures,
            "transitive": rep.transitive_failures,
            "relations": int(ctx.rel(kind).sum()),
        }
        if not rep.ok:
            res.fail(f"{kind}: {rep}")
    return res


def witnesses(ctx: BallContext) -> CheckResult:
    """Every positive verdict carries a witness satisfying the raw inequalities."""
    res = CheckResult("witness-revalidation")
    for m in ctx.elems:
        for n in ctx.elems:
            v = leq_pp(m, n)
            if v.holds:
                res.checked += 1
                if not check_pp_witness(m, n, v.witness):
                    res.fail(("pp", str(m), str(n)))
            v = leq_mp(m, n)
            if v.holds:
                res.checked += 1
                if not check_mp_witness(m, n, v.witness):
                    res.fail(("mp", str(m), str(n)))
    return res


def unit_restriction(ctx: BallContext, oracle: Callable | None = None) -> CheckResult:
    """On units all three orders agree with ``oracle`` (default: bruhat_leq)."""
    res = CheckResult("unit-restriction")
    group = ctx.group
    oracle = oracle or group.bruhat_leq
    units = [k for k, m in enumerate(ctx.elems) if m.is_unit]
    for kind in (PP, MM, MP):
        rel = ctx.rel(kind)
        for a in units:
            for b in units:
                res.checked += 1
                want = oracle(ctx.elems[a].as_unit, ctx.elems[b].as_unit)
                if bool(rel[a, b]) != want:
                    res.fail((kind, str(ctx.elems[a]), str(ctx.elems[b])))
    return res


def inverse_compatibility(ctx: BallContext) -> CheckResult:
    res = CheckResult("inverse-compatibility")
    perm = ctx.inverse_permutation()
    pp, mm_direct, mp = ctx.rel(PP), ctx.rel("mm-direct"), ctx.rel(MP)
    mm = ctx.rel(MM)
    checks = {
        "pp-vs-inverse-mm": (pp, mm_direct[np.ix_(perm, perm)]),
        "mp-vs-inverse-mp": (mp, mp[np.ix_(perm, perm)]),
        "mm-two-routes": (mm, mm_direct),
    }
    for name, (lhs, rhs) in checks.items():
        res.checked += lhs.size
        bad = np.argwhere(lhs != rhs)
        res.notes[name] = int(len(bad))
        for a, b in bad[:MAX_REPORTED]:
            res.fail((name, str(ctx.elems[a]), str(ctx.elems[b])))
    return res


def length_deltas(ctx: BallContext) -> CheckResult:
    res = CheckResult("length-deltas")
    group = ctx.group
    for m in ctx.elems:
        base = lengths(m)
        for side in (LEFT, RIGHT):
            for i in range(group.n):
                prod = act_gen(side, i, m)
                diff = lengths(prod) - base
                beta = delta_root(side, i, m)
                if beta.sign not in ("Positive", "Negative") or not group.is_real_root(beta):
                    res.fail(("not a real root", side, i, str(m), str(beta)))
                for kind in KINDS:
                    res.checked += 1
                    d = length_delta(side, i, m, kind)
                    if d != diff.get(kind):
                        res.fail((side, i, kind, str(m), d, diff.get(kind)))
                    if (d == 0) != (prod == m):
                        res.fail(("fixed-point mismatch", side, i, kind, str(m)))
    return res


def orbit_strictness(group: WeylGroup, radius: int) -> CheckResult:
    res = CheckResult("orbit-strictness-and-chains")
    chain_stats = {}
    for theta in group.gcm.special_subsets():
        elems = orbit_ball(group, theta, radius)
        for kind in KINDS:
            rel = relation_matrix(elems, kind)
            lens = np.array([lengths(m).get(kind) for m in elems])
            strict = rel.copy()
            np.fill_diagonal(strict, False)
            for a, b in np.argwhere(strict):
                res.checked += 1
                if not lens[a] < lens[b]:
                    res.fail(("strictness", kind, str(elems[a]), str(elems[b])))
            red = hasse_graph(elems, kind, rel)
            gaps = {}
            for (a, b), d in longest_chain_lengths(red).items():
                if a == b:
                    continue
                res.checked += 1
                gap = int(lens[b] - lens[a])
                if d > gap:
                    res.fail(("chain", kind, str(elems[a]), str(elems[b]), d, gap))
                gaps[(gap, d)] = gaps.get((gap, d), 0) + 1
            label = "{" + ",".join(str(i + 1) for i in sorted(theta)) + "}"
            chain_stats[f"{label}/{kind}"] = {
                "pairs": sum(gaps.values()),
                "pairs_with_longest_chain_equal_to_gap": sum(
                    c for (g, d), c in gaps.items() if g == d
                ),
            }
    res.notes["chains"] = chain_stats
    return res


def tits_selector(ctx: BallContext) -> CheckResult:
    res = CheckResult("tits-product-selector")
    group = ctx.group
    reverse_closure = {"holds": 0, "fails": 0}
    configs = [(s, SAME, e) for s in (LEFT, RIGHT) for e in ("+", "-")]
    configs += [(LEFT, MIXED, "+"), (RIGHT, MIXED, "-")]
    for m in ctx.elems:
        for i in range(group.n):
            for side, shape, eps in configs:
                res.checked += 1
                tp = tits_product(side, shape, eps, i, m)
                kind = PP if eps == "+" else MM
                d = length_delta(side, i, m, kind)
                moved = act_gen(side, i, m)
                grow = 1 if shape == SAME else -1
                expected = {0: ("unchanged", (m,)), grow: ("moved", (moved,)), -grow: ("union", (moved, m))}
                case, elems = expected[d]
                if tp.case != case or tuple(c.elem for c in tp.cells) != elems:
                    res.fail(("selector", side, shape, eps, i, str(m)))
                if shape == SAME:
                    signs = (eps, eps)
                    here, there = CellLabel(signs, m), CellLabel(signs, moved)
                    if d == 1 and not closure_leq(here, there):
                        res.fail(("closure", side, eps, i, str(m)))
                    if d == -1:
                        reverse_closure["holds" if closure_leq(there, here) else "fails"] += 1
    res.notes["delta_minus_one_reverse_closure"] = reverse_closure
    return res


def random_words(group: WeylGroup, count: int, max_len: int, seed: int = 0) -> list[list[tuple]]:
    """Deterministic pseudo-random words over s_i and e(Theta) atoms."""
    rng = random.Random(seed)
    specials = [t for t in group.gcm.special_subsets() if t]
    out = []
    for _ in range(count):
        word = []
        for _ in range(rng.randint(1, max_len)):
            if specials and rng.random() < 0.3:
                word.append(("e", rng.choice(specials)))
            else:
                word.append(("s", rng.randrange(group.n)))
        out.append(word)
    return out


def word_text(word: list[tuple]) -> str:
    parts = []
    for atom in word:
        if atom[0] == "s":
            parts.append(f"s{atom[1] + 1}")
        else:
            parts.append("e(" + ",".join(str(i + 1) for i in sorted(atom[1])) + ")")
    return " ".join(parts)


def evaluate_word(group: WeylGroup, word: list[tuple], budget: int, cap: int) -> tuple[MonoidElem, str]:
    acc = unit(group.identity)
    tag = EXACT
    for atom in word:
        if atom[0] == "s":
            factor = unit(group.gen(atom[1]))
        else:
            factor = from_parts(group.identity, atom[1], group.identity)
        acc, t = multiply(acc, factor, budget, cap)
        if t != EXACT:
            tag = t
    return acc, tag


def sample_points(group: WeylGroup, radius: int) -> list[ConePoint]:
    """Relative-interior points w . indicator(I - J) of facets w F_J."""
    pts = []
    seen = set()
    full = group.gcm.index_set
    for k in range(group.n + 1):
        for J in combinations(range(group.n), k):
            base = indicator(group.n, full - frozenset(J))
            for w in group.ball(radius):
                p = apply_weyl(w, base)
                if p not in seen:
                    seen.add(p)
                    pts.append(p)
    return pts


def word_action(group: WeylGroup, word: list[tuple], lam: ConePoint):
    """Act by a raw word, right to left, without normalizing it."""
    from .titscone import reflect_point

    cur = lam
    for atom in reversed(word):
        if atom[0] == "s":
            cur = reflect_point(group, atom[1], cur)
        elif any(cur.values[i] for i in atom[1]):
            return ANNIHILATED
    return cur


def normal_forms(group: WeylGroup, count: int = 1000, max_len: int = 6, sample_radius: int = 3,
                 budget: int = 4, cap: int = 10**4, seed: int = 0) -> CheckResult:
    from .grammar import parse_element
    from .monoid import format_expression, format_nf3

    res = CheckResult("normal-forms")
    pts = sample_points(group, sample_radius)
    res.notes["sample_points"] = len(pts)
    signatures: dict = {}
    tags = {}
    for word in random_words(group, count, max_len, seed):
        res.checked += 1
        m, tag = evaluate_word(group, word, budget, cap)
        tags[tag] = tags.get(tag, 0) + 1
        perp = group.gcm.theta_perp(m.theta)
        stab = m.theta | perp
        # storage invariants
        if m.w1.right_descents() & stab or m.w3.left_descents() & stab or not m.w2.letters <= perp:
            res.fail(("not canonical", word_text(word), str(m)))
        # idempotence under regrouping
        a, b = m.nf1
        c, d = m.nf2
        for again in (from_parts(a, m.theta, b), from_parts(c, m.theta, d),
                      from_parts(m.w1, m.theta, m.w2 * m.w3)):
            if again != m:
                res.fail(("regrouping", word_text(word), str(m), str(again)))
        for text in (format_nf3(m), format_expression(m)):
            again, _ = parse_element(group, text, budget, cap)
            if again != m:
                res.fail(("reparse", text, str(again)))
        # normal forms I and II and their bijection with III
        if a.right_descents() & m.theta or b.left_descents() & stab:
            res.fail(("nf1 conditions", str(m)))
        if c.right_descents() & stab or d.left_descents() & m.theta:
            res.fail(("nf2 conditions", str(m)))
        w1 = group.coset_min(a, stab, "right")
        w3 = group.coset_min(d, stab, "left")
        if (w1, w1.inverse() * a, w3, d * w3.inverse()) != (m.w1, m.w2, m.w3, m.w2):
            res.fail(("nf bijection", str(m)))
        # action oracle
        if tag == EXACT:
            sig = tuple(act_unchecked(m, p) for p in pts)
            raw = tuple(word_action(group, word, p) for p in pts)
            if sig != raw:
                res.fail(("action", word_text(word), str(m)))
            signatures.setdefault(sig, set()).add(m)
    for sig, ms in signatures.items():
        if len(ms) > 1:
            res.fail(("distinct canonical forms act identically", sorted(str(m) for m in ms)))
    res.notes["exactness"] = tags
    res.notes["distinct_elements"] = len(signatures)
    return res


def faces(group: WeylGroup, radius: int = 2, budget: int = 4, cap: int = 10**4) -> CheckResult:
    res = CheckResult("faces")
    specials = group.gcm.special_subsets()
    for t1 in specials:
        for t2 in specials:
            res.checked += 1
            f, tag = face_intersect(group, make_face(group, t1), make_face(group, t2), budget, cap)
            if tag != EXACT or f != make_face(group, t1 | t2):
                res.fail(("standard pair", sorted(t1), sorted(t2), str(f), tag))
    fs = special_faces_up_to(group, radius)
    res.notes["faces"] = len(fs)
    tags = {}
    for f1 in fs:
        for f2 in fs:
            res.checked += 1
            g12, t12 = face_intersect(group, f1, f2, budget, cap)
            g21, t21 = face_intersect(group, f2, f1, budget, cap)
            tags[t12] = tags.get(t12, 0) + 1
            if g12 != g21 or t12 != t21:
                res.fail(("commutativity", str(f1), str(f2)))
            if t12 == EXACT:
                if not (face_contains(group, f1, g12) and face_contains(group, f2, g12)):
                    res.fail(("containment", str(f1), str(f2), str(g12)))
                if face_contains(group, g12, f1) != (g12 == f1):
                    res.fail(("containment order", str(f1), str(g12)))
        g, t = face_intersect(group, f1, f1, budget, cap)
        if g != f1 or t != EXACT:
            res.fail(("idempotence", str(f1)))
    res.notes["exactness"] = tags
    return res


def search_bounds(ctx: BallContext) -> CheckResult:
    res = CheckResult("search-bound-completeness")
    for m in ctx.elems:
        for n in ctx.elems:
            res.checked += 2
            if leq_pp(m, n).holds != leq_pp_exhaustive(m, n):
                res.fail(("pp", str(m), str(n)))
            if leq_mp(m, n).holds != leq_mp_exhaustive(m, n):
                res.fail(("mp", str(m), str(n)))
    return res


def finite_collapse(group: WeylGroup, radius: int) -> CheckResult:
    res = CheckResult("finite-type-collapse")
    ctx = BallContext(group, radius)
    units = [unit(w) for w in group.ball(radius)]
    if sorted(ctx.elems, key=MonoidElem.sort_key) != sorted(units, key=MonoidElem.sort_key):
        res.fail(("ball differs", len(ctx.elems), len(units)))
    for m in ctx.elems:
        res.checked += 1
        l = lengths(m)
        if not (l.l_pp == l.l_mm == l.l_mp == m.as_unit.length):
            res.fail(("lengths", str(m)))
    sub = unit_restriction(ctx)
    res.checked += sub.checked
    for v in sub.violations:
        res.fail(v)
    return res


def wjj_lemma(group: WeylGroup, height: int = 12, radius: int | None = None) -> CheckResult:
    """Orbit W_J{alpha_j} versus real roots supported in J, by brute force."""
    from .coxeter import RootVector, simple_root

    res = CheckResult("wjj-lemma")
    n = group.n
    radius = radius or height + 2
    vectors = [
        c for c in _nonneg_vectors(n, height) if any(c)
    ]
    for k in range(1, n + 1):
        for J in combinations(range(n), k):
            J = frozenset(J)
            orbit = set()
            for w in group.ball(radius, J):
                for j in J:
                    beta = group.act_on_root(w, simple_root(n, j))
                    if abs(beta.height) <= height:
                        orbit.add(beta)
            for c in vectors:
                for beta in (RootVector(c), -RootVector(c)):
                    res.checked += 1
                    if group.in_WJJ(beta, J) != (beta in orbit):
                        res.fail((sorted(J), str(beta)))
    return res


def _nonneg_vectors(n: int, total: int):
    if n == 1:
        for x in range(total + 1):
            yield (x,)
        return
    for x in range(total + 1):
        for rest in _nonneg_vectors(n - 1, total - x):
            yield (x,) + rest


def selftest(group: WeylGroup, radius: int = 3) -> list[CheckResult]:
    """Quick run of every suite at small bounds."""
    ctx = BallContext(group, radius)
    out = [
        order_axioms(ctx),
        witnesses(ctx),
        unit_restriction(ctx),
        inverse_compatibility(ctx),
        length_deltas(ctx),
        orbit_strictness(group, radius),
        tits_selector(ctx),
        normal_forms(group, count=100, max_len=4, sample_radius=2),
        faces(group, radius=1),
        search_bounds(BallContext(group, min(radius, 2))),
        wjj_lemma(group, height=6),
    ]
    return out
