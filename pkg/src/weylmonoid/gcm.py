"""Generalized Cartan matrices: validation, symmetrizer, type classification,
special subsets and orthogonal complements."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import sympy

from .errors import (
    DiagonalNotTwo,
    NotSymmetrizable,
    PositiveOffDiagonal,
    ValidationError,
    ZeroPairViolation,
)

FINITE = "Finite"
AFFINE = "Affine"
INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class SubsetTag:
    indices: frozenset
    special: bool
    perp: frozenset


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix.

    Indices are 0-based throughout the library; the text grammar of the
    CLI uses 1-based generator labels.
    """

    n: int
    entries: tuple
    symmetrizer: tuple
    components: tuple  # ((frozenset, type tag), ...)
    name: str = ""
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def a(self, i: int, j: int) -> int:
        return self.entries[i][j]

    @property
    def index_set(self) -> frozenset:
        return frozenset(range(self.n))

    def connected_components(self, subset: Iterable[int]) -> list[frozenset]:
        return _components(self.entries, subset)

    def classify(self, indices: Iterable[int]) -> str:
        """Type of the submatrix on a connected index set."""
        key = ("type", frozenset(indices))
        if key not in self._cache:
            self._cache[key] = _classify(self.entries, sorted(key[1]))
        return self._cache[key]

    def is_special(self, theta: Iterable[int]) -> bool:
        theta = frozenset(theta)
        key = ("special", theta)
        if key not in self._cache:
            self._cache[key] = all(
                self.classify(c) != FINITE for c in self.connected_components(theta)
            )
        return self._cache[key]

    def theta_perp(self, theta: Iterable[int]) -> frozenset:
        theta = frozenset(theta)
        key = ("perp", theta)
        if key not in self._cache:
            self._cache[key] = frozenset(
                i for i in range(self.n) if all(self.entries[i][j] == 0 for j in theta)
            )
        return self._cache[key]

    def subset_tag(self, theta: Iterable[int]) -> SubsetTag:
        theta = frozenset(theta)
        return SubsetTag(theta, self.is_special(theta), self.theta_perp(theta))

    def non_finite_part(self, subset: Iterable[int]) -> frozenset:
        """Union of the non-finite components of the induced submatrix."""
        out: set[int] = set()
        for c in self.connected_components(subset):
            if self.classify(c) != FINITE:
                out |= c
        return frozenset(out)

    def special_subsets(self, max_size: int | None = None) -> list[frozenset]:
        """All special subsets, ordered by size then lexicographically."""
        top = self.n if max_size is None else min(max_size, self.n)
        key = ("specials", top)
        if key not in self._cache:
            out = []
            for k in range(top + 1):
                for c in combinations(range(self.n), k):
                    if self.is_special(c):
                        out.append(frozenset(c))
            self._cache[key] = out
        return list(self._cache[key])

    def symmetrized(self) -> list[list[Fraction]]:
        """D^{-1} A, which is symmetric."""
        return [
            [Fraction(self.entries[i][j], self.symmetrizer[i]) for j in range(self.n)]
            for i in range(self.n)
        ]


def _components(entries, subset: Iterable[int]) -> list[frozenset]:
    remaining = set(subset)
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        remaining.discard(start)
        while queue:
            i = queue.popleft()
            for j in list(remaining):
                if entries[i][j] != 0:
                    remaining.discard(j)
                    comp.add(j)
                    queue.append(j)
        out.append(frozenset(comp))
    out.sort(key=min)
    return out


def _minor(entries, idx: Sequence[int]) -> int:
    return int(sympy.Matrix([[entries[i][j] for j in idx] for i in idx]).det())


def _classify(entries, idx: list[int]) -> str:
    proper_positive = all(
        _minor(entries, s) > 0
        for k in range(1, len(idx))
        for s in combinations(idx, k)
    )
    det = _minor(entries, idx)
    if proper_positive and det > 0:
        return FINITE
    if proper_positive and det == 0:
        return AFFINE
    return INDEFINITE


def _solve_symmetrizer(entries, n: int) -> tuple:
    eps: list[Fraction | None] = [None] * n
    for comp in _components(entries, range(n)):
        root = min(comp)
        eps[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in comp:
                if j == i or entries[i][j] == 0:
                    continue
                # eps_j * a_ij = eps_i * a_ji
                want = eps[i] * entries[j][i] / entries[i][j]
                if eps[j] is None:
                    eps[j] = want
                    queue.append(j)
                elif eps[j] != want:
                    raise NotSymmetrizable(
                        f"inconsistent symmetrizer equations around indices {i + 1},{j + 1}"
                    )
        denom = math.lcm(*(eps[i].denominator for i in comp))
        scaled = {i: int(eps[i] * denom) for i in comp}
        g = math.gcd(*scaled.values())
        for i, v in scaled.items():
            eps[i] = v // g
    return tuple(int(e) for e in eps)


def validate(matrix: Sequence[Sequence[int]], name: str = "") -> GCM:
    """Check the Cartan-matrix axioms and build a :class:`GCM`."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n < 1:
        raise ValidationError("matrix must have at least one row")
    for r in rows:
        if len(r) != n:
            raise ValidationError("matrix must be square")
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ValidationError(f"entry {x!r} is not an integer")
    for i in range(n):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(f"a_{i + 1}{i + 1} = {rows[i][i]}")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise PositiveOffDiagonal(f"a_{i + 1}{j + 1} = {rows[i][j]}")
    for i in range(n):
        for j in range(n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise ZeroPairViolation(f"a_{i + 1}{j + 1} and a_{j + 1}{i + 1}")
    entries = tuple(tuple(r) for r in rows)
    eps = _solve_symmetrizer(entries, n)
    comps = tuple((c, _classify(entries, sorted(c))) for c in _components(entries, range(n)))
    return GCM(n=n, entries=entries, symmetrizer=eps, components=comps, name=name)


def symmetrizer(gcm: GCM) -> tuple:
    return gcm.symmetrizer


def classify_component(gcm: GCM, component: Iterable[int]) -> str:
    return gcm.classify(component)


def is_special(gcm: GCM, theta: Iterable[int]) -> bool:
    return gcm.is_special(theta)


def theta_perp(gcm: GCM, theta: Iterable[int]) -> frozenset:
    return gcm.theta_perp(theta)


def parse_gcm_document(text: str) -> GCM:
    """Parse the JSON document form ``{"A": [[...], ...], "name": ...}``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"GCM file is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "A" not in doc:
        raise ValidationError('GCM file must be an object with key "A"')
    rows = doc["A"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ValidationError('"A" must be a nonempty list of rows')
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValidationError("ragged rows in GCM matrix")
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ValidationError('"name" must be a string')
    return validate(rows, name=name)


def load_gcm(path: str | Path) -> GCM:
    return parse_gcm_document(Path(path).read_text(encoding="utf-8"))


REFERENCE_MATRICES = {
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "affA1": [[2, -2], [-2, 2]],
    "H2": [[2, -3], [-3, 2]],
    "blockH2A1": [[2, -3, 0], [-3, 2, 0], [0, 0, 2]],
    "hyp3": [[2, -2, -2], [-2, 2, -2], [-2, -2, 2]],
}


def reference(name: str) -> GCM:
    return validate(REFERENCE_MATRICES[name], name=name)
