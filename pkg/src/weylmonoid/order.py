"""The three extended Bruhat orders on the Weyl monoid.

Conventions: ``leq_pp(m, n)`` means m <=_{++} n and likewise for ``leq_mm``
and ``leq_mp``.  For <=_{-+} the element with the larger Theta is the larger
one, so ``leq_mp(m, n)`` requires Theta(n) to contain Theta(m).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import networkx as nx
import numpy as np

from .coxeter import WeylElem, WeylGroup, word_str
from .monoid import MonoidElem, format_nf3, inverse

PP, MM, MP = "pp", "mm", "mp"
KINDS = (PP, MM, MP)


@dataclass(frozen=True)
class OrderVerdict:
    holds: bool
    witness: WeylElem | None
    search_bound: int

    def __bool__(self) -> bool:
        return self.holds

    def to_record(self) -> dict:
        return {
            "holds": self.holds,
            "witness": None if self.witness is None else word_str(self.witness.word),
            "search_bound": self.search_bound,
        }


def _candidates(group: WeylGroup, perp: frozenset, theta: frozenset, radius: int) -> list[WeylElem]:
    """Elements of W_perp of length <= radius with no right descent in theta, in BFS order."""
    key = ("order-candidates", perp, theta, radius)
    out = group.memo.get(key)
    if out is None:
        out = [w for w in group.ball(radius, perp) if not (w.right_descents() & theta)]
        group.memo[key] = out
    return out


def _parabolic_search(
    group: WeylGroup,
    theta_big: frozenset,
    perp_small: frozenset,
    radius: int,
    test: Callable[[WeylElem], bool],
    restrict: bool = True,
) -> WeylElem | None:
    if restrict:
        cands = _candidates(group, perp_small, theta_big, radius)
    else:
        cands = group.ball(radius, perp_small)
    for w in cands:
        if test(w):
            return w
    return None


def _pp_test(group: WeylGroup, theta: frozenset, w1, w2, v1, v2):
    """Criterion with coset projections: w1 <= (v1 w)^theta and w2 >= ^theta(w^-1 v2)."""
    leq = group.bruhat_leq
    cmin = group.coset_min

    def test(w: WeylElem) -> bool:
        return leq(w1, cmin(v1 * w, theta, "right")) and leq(
            cmin(w.inverse() * v2, theta, "left"), w2
        )

    return test


def _to_product_witness(group: WeylGroup, theta: frozenset, w: WeylElem, v2: WeylElem) -> WeylElem:
    """Turn a parabolic witness into one for the product-set criterion."""
    x = w.inverse() * v2
    tilde = x * group.coset_min(x, theta, "left").inverse()
    return w * tilde


def leq_pp(m: MonoidElem, n: MonoidElem) -> OrderVerdict:
    """m <=_{++} n.

    Searches w in W_{Theta'-perp} minimal in w.W_Theta up to length
    l(w2) + l(w2'); a hit is converted to a witness in W_{Theta'-perp} W_Theta
    satisfying w1 <= w1' w and w2 >= w^-1 w2'.
    """
    group = m.group
    theta, theta2 = m.theta, n.theta
    if not theta >= theta2:
        return OrderVerdict(False, None, 0)
    w1, w2 = m.nf1
    v1, v2 = n.nf1
    radius = w2.length + v2.length
    perp2 = group.gcm.theta_perp(theta2)
    hit = _parabolic_search(group, theta, perp2, radius, _pp_test(group, theta, w1, w2, v1, v2))
    if hit is None:
        return OrderVerdict(False, None, radius)
    return OrderVerdict(True, _to_product_witness(group, theta, hit, v2), radius)


def leq_mm(m: MonoidElem, n: MonoidElem) -> OrderVerdict:
    """m <=_{--} n, computed as inv(m) <=_{++} inv(n)."""
    return leq_pp(inverse(m), inverse(n))


def leq_mm_direct(m: MonoidElem, n: MonoidElem) -> OrderVerdict:
    """m <=_{--} n straight from the normal-form-II parts.

    Needs w1 >= (w1' w)^Theta and w2 <= ^Theta(w^-1 w2'); the first inequality
    bounds l(w) by l(w1) + l(w1').
    """
    group = m.group
    theta, theta2 = m.theta, n.theta
    if not theta >= theta2:
        return OrderVerdict(False, None, 0)
    w1, w2 = m.nf2
    v1, v2 = n.nf2
    radius = w1.length + v1.length
    perp2 = group.gcm.theta_perp(theta2)
    leq = group.bruhat_leq
    cmin = group.coset_min

    def test(w: WeylElem) -> bool:
        return leq(cmin(v1 * w, theta, "right"), w1) and leq(
            w2, cmin(w.inverse() * v2, theta, "left")
        )

    hit = _parabolic_search(group, theta, perp2, radius, test)
    return OrderVerdict(hit is not None, hit, radius)


def leq_mp(m: MonoidElem, n: MonoidElem) -> OrderVerdict:
    """m <=_{-+} n, i.e. the cell of n lies in the closure of the cell of m.

    Holds iff Theta(n) contains Theta(m) and some w in W_{Theta(m)-perp}
    satisfies W1 >= (w1 w)^{Theta(n)} and W2 >= ^{Theta(n)}(w^-1 w2), where
    (W1, W2) and (w1, w2) are the normal-form-I parts of n and m.
    """
    group = m.group
    big, small = n, m
    theta = big.theta
    if not theta >= small.theta:
        return OrderVerdict(False, None, 0)
    W1, W2 = big.nf1
    w1, w2 = small.nf1
    radius = W2.length + w2.length
    perp = group.gcm.theta_perp(small.theta)
    test = _mp_test(group, theta, W1, W2, w1, w2)
    hit = _parabolic_search(group, theta, perp, radius, test)
    return OrderVerdict(hit is not None, hit, radius)


def _mp_test(group: WeylGroup, theta, W1, W2, w1, w2):
    leq = group.bruhat_leq
    cmin = group.coset_min

    def test(w: WeylElem) -> bool:
        return leq(cmin(w1 * w, theta, "right"), W1) and leq(
            cmin(w.inverse() * w2, theta, "left"), W2
        )

    return test


def leq(kind: str, m: MonoidElem, n: MonoidElem) -> OrderVerdict:
    if kind == PP:
        return leq_pp(m, n)
    if kind == MM:
        return leq_mm(m, n)
    if kind == MP:
        return leq_mp(m, n)
    raise ValueError(f"unknown order kind {kind!r}")


def check_pp_witness(m: MonoidElem, n: MonoidElem, w: WeylElem) -> bool:
    """Re-validate a <=_{++} witness against the product-set inequalities."""
    group = m.group
    w1, w2 = m.nf1
    v1, v2 = n.nf1
    return (
        m.theta >= n.theta
        and group.in_product_set(group.gcm.theta_perp(n.theta), w, m.theta)
        and group.bruhat_leq(w1, v1 * w)
        and group.bruhat_leq(w.inverse() * v2, w2)
    )


def check_mp_witness(m: MonoidElem, n: MonoidElem, w: WeylElem) -> bool:
    group = m.group
    W1, W2 = n.nf1
    w1, w2 = m.nf1
    return (
        n.theta >= m.theta
        and w.letters <= group.gcm.theta_perp(m.theta)
        and _mp_test(group, n.theta, W1, W2, w1, w2)(w)
    )


def product_set_ball(group: WeylGroup, J: frozenset, K: frozenset, radius: int) -> list[WeylElem]:
    """Elements of W_J W_K of length <= radius, in BFS order."""
    key = ("product-set-ball", J, K, radius)
    if key in group.memo:
        return group.memo[key]
    layer = [group.identity]
    seen = {group.identity.uid}
    out = [group.identity]
    for _ in range(radius):
        nxt = []
        for w in layer:
            moves = [w.lmul(s) for s in sorted(J) if s not in w.left_descents()]
            moves += [w.rmul(s) for s in sorted(K) if s not in w.right_descents()]
            for u in moves:
                if u.uid not in seen:
                    seen.add(u.uid)
                    nxt.append(u)
        nxt.sort(key=WeylElem.sort_key)
        out.extend(nxt)
        layer = nxt
    group.memo[key] = out
    return out


def leq_pp_exhaustive(m: MonoidElem, n: MonoidElem, factor: int = 2) -> bool:
    """Product-set criterion searched over all of W_{Theta'-perp} W_Theta
    up to ``factor`` times the standard length bound."""
    group = m.group
    if not m.theta >= n.theta:
        return False
    w1, w2 = m.nf1
    v1, v2 = n.nf1
    radius = factor * (w2.length + v2.length)
    perp2 = group.gcm.theta_perp(n.theta)
    for w in product_set_ball(group, perp2, m.theta, radius):
        if group.bruhat_leq(w1, v1 * w) and group.bruhat_leq(w.inverse() * v2, w2):
            return True
    return False


def leq_mp_exhaustive(m: MonoidElem, n: MonoidElem, factor: int = 2) -> bool:
    """<=_{-+} searched over all of W_{Theta(m)-perp} up to ``factor`` times the bound."""
    group = m.group
    if not n.theta >= m.theta:
        return False
    W1, W2 = n.nf1
    w1, w2 = m.nf1
    radius = factor * (W2.length + w2.length)
    perp = group.gcm.theta_perp(m.theta)
    test = _mp_test(group, n.theta, W1, W2, w1, w2)
    return _parabolic_search(group, n.theta, perp, radius, test, restrict=False) is not None


def relation_matrix(elems: Sequence[MonoidElem], kind: str) -> np.ndarray:
    """Boolean matrix R with R[a, b] = elems[a] <=_kind elems[b]."""
    size = len(elems)
    rel = np.zeros((size, size), dtype=bool)
    fn = {PP: leq_pp, MM: leq_mm, MP: leq_mp}[kind]
    for a, m in enumerate(elems):
        for b, n in enumerate(elems):
            if kind == MP:
                if not n.theta >= m.theta:
                    continue
            elif not m.theta >= n.theta:
                continue
            rel[a, b] = fn(m, n).holds
    return rel


@dataclass(frozen=True)
class AxiomReport:
    reflexive_failures: int
    antisymmetric_failures: int
    transitive_failures: int

    @property
    def ok(self) -> bool:
        return not (self.reflexive_failures or self.antisymmetric_failures or self.transitive_failures)


def check_axioms(rel: np.ndarray) -> AxiomReport:
    refl = int((~np.diag(rel)).sum())
    sym = rel & rel.T
    np.fill_diagonal(sym, False)
    anti = int(sym.sum()) // 2
    r = rel.astype(np.int64)
    comp = (r @ r) > 0
    trans = int((comp & ~rel).sum())
    return AxiomReport(refl, anti, trans)


def hasse_graph(elems: Sequence[MonoidElem], kind: str, rel: np.ndarray | None = None) -> nx.DiGraph:
    """Covering graph on ``elems``: edges run from covered to covering element."""
    if rel is None:
        rel = relation_matrix(elems, kind)
    g = nx.DiGraph()
    g.add_nodes_from(range(len(elems)))
    src, dst = np.nonzero(rel)
    g.add_edges_from((int(a), int(b)) for a, b in zip(src, dst) if a != b)
    red = nx.transitive_reduction(g)
    red.add_nodes_from(g.nodes)
    return red


def covers(m: MonoidElem, ball: Sequence[MonoidElem], kind: str) -> list[MonoidElem]:
    """Elements of ``ball`` covering m within the ball."""
    elems = list(ball)
    if m not in elems:
        elems.append(m)
    red = hasse_graph(elems, kind)
    idx = elems.index(m)
    return sorted((elems[b] for b in red.successors(idx)), key=MonoidElem.sort_key)


def hasse_export(elems: Sequence[MonoidElem], kind: str) -> tuple[str, dict]:
    """DOT text and adjacency document for the covering relation."""
    red = hasse_graph(elems, kind)
    labels = [format_nf3(m) for m in elems]
    lines = [f'digraph "hasse_{kind}" {{']
    for i, lab in enumerate(labels):
        lines.append(f'  n{i} [label="{lab}"];')
    for a, b in sorted(red.edges):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    adjacency = {
        "kind": kind,
        "nodes": labels,
        "edges": [[labels[a], labels[b]] for a, b in sorted(red.edges)],
    }
    return "\n".join(lines) + "\n", adjacency


def longest_chain_lengths(red: nx.DiGraph) -> dict[tuple[int, int], int]:
    """Length of the longest chain between every comparable pair of a covering DAG."""
    order = list(nx.topological_sort(red))
    out: dict[tuple[int, int], int] = {}
    for s in order:
        dist = {s: 0}
        for u in order:
            if u not in dist:
                continue
            for v in red.successors(u):
                if dist.get(v, -1) < dist[u] + 1:
                    dist[v] = dist[u] + 1
        for t, d in dist.items():
            out[(s, t)] = d
    return out
