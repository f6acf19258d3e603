"""Weyl group elements as integer matrices on the root lattice.

Elements are interned per group: every element of a given :class:`WeylGroup`
exists exactly once, so identity comparison is element equality.  The matrix
of ``w`` has ``w(alpha_j)`` as its ``j``-th column, stored row-major as a flat
tuple.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotARoot, ResourceBudgetExceeded
from .gcm import GCM

POSITIVE = "Positive"
NEGATIVE = "Negative"
MIXED = "Mixed"

DEFAULT_BALL_CAP = 10**6


@dataclass(frozen=True)
class RootVector:
    """Integer vector in simple-root coordinates."""

    coords: tuple

    @property
    def sign(self) -> str:
        if all(c >= 0 for c in self.coords) and any(c > 0 for c in self.coords):
            return POSITIVE
        if all(c <= 0 for c in self.coords) and any(c < 0 for c in self.coords):
            return NEGATIVE
        return MIXED

    @property
    def support(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.coords) if c != 0)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> RootVector:
        return RootVector(tuple(-c for c in self.coords))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            coef = "" if abs(c) == 1 else f"{abs(c)}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{coef}a{i + 1}"))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {t}" for s, t in terms[1:])


def simple_root(n: int, i: int) -> RootVector:
    return RootVector(tuple(1 if k == i else 0 for k in range(n)))


class WeylElem:
    """An element of a Weyl group; obtain instances from a :class:`WeylGroup`."""

    __slots__ = (
        "group", "key", "word", "uid", "_inv", "_lmul", "_rmul",
        "_ldesc", "_rdesc", "_coweight", "__weakref__",
    )

    def __init__(self, group: WeylGroup, key: tuple, word: tuple, uid: int):
        self.group = group
        self.key = key
        self.word = word
        self.uid = uid
        self._inv = None
        n = group.n
        self._lmul = [None] * n
        self._rmul = [None] * n
        self._ldesc = None
        self._rdesc = None
        self._coweight = None

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def letters(self) -> frozenset:
        """Generators occurring in any reduced word."""
        return frozenset(self.word)

    def inverse(self) -> WeylElem:
        if self._inv is None:
            self._inv = self.group._intern(_inverse_key(self.group, self))
        return self._inv

    def right_descents(self) -> frozenset:
        if self._rdesc is None:
            self._rdesc = _negative_columns(self.key, self.group.n)
        return self._rdesc

    def left_descents(self) -> frozenset:
        if self._ldesc is None:
            self._ldesc = self.inverse().right_descents()
        return self._ldesc

    def descents(self, side: str) -> frozenset:
        return self.left_descents() if side == "left" else self.right_descents()

    def lmul(self, i: int) -> WeylElem:
        """s_i * self."""
        out = self._lmul[i]
        if out is None:
            out = self.group._intern(_left_reflect(self.group, self.key, i))
            self._lmul[i] = out
            out._lmul[i] = self
        return out

    def rmul(self, i: int) -> WeylElem:
        """self * s_i."""
        out = self._rmul[i]
        if out is None:
            out = self.group._intern(_right_reflect(self.group, self.key, i))
            self._rmul[i] = out
            out._rmul[i] = self
        return out

    def __mul__(self, other: WeylElem) -> WeylElem:
        return self.group.compose(self, other)

    def column(self, j: int) -> tuple:
        n = self.group.n
        return tuple(self.key[r * n + j] for r in range(n))

    def coweight_matrix(self) -> tuple:
        """Integer matrix N with values(w.lam) = N values(lam) in coroot-value coordinates."""
        if self._coweight is None:
            g = self.group
            n = g.n
            mat = [[int(r == c) for c in range(n)] for r in range(n)]
            a = g.gcm.entries
            for j in self.word:
                # right-multiply by T_j, T_j[i][k] = delta_ik - a_ij delta_jk
                for row in mat:
                    row[j] -= sum(row[i] * a[i][j] for i in range(n))
            self._coweight = tuple(tuple(r) for r in mat)
        return self._coweight

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)

    def __lt__(self, other: WeylElem) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return word_str(self.word)

    def __repr__(self) -> str:
        return f"WeylElem({word_str(self.word)})"

    def __reduce__(self):
        raise TypeError("WeylElem values are interned per group and cannot be pickled")


def word_str(word: Sequence[int]) -> str:
    return " ".join(f"s{i + 1}" for i in word) if word else "e"


def _negative_columns(key: tuple, n: int) -> frozenset:
    out = []
    for j in range(n):
        for r in range(n):
            v = key[r * n + j]
            if v != 0:
                if v < 0:
                    out.append(j)
                break
    return frozenset(out)


def _right_reflect(group: WeylGroup, key: tuple, i: int) -> tuple:
    n = group.n
    a = group.gcm.entries
    m = list(key)
    for l in range(n):
        c = a[i][l]
        if c == 0:
            continue
        for r in range(n):
            m[r * n + l] = key[r * n + l] - c * key[r * n + i]
    return tuple(m)


def _left_reflect(group: WeylGroup, key: tuple, i: int) -> tuple:
    n = group.n
    a = group.gcm.entries
    m = list(key)
    for c in range(n):
        m[i * n + c] = key[i * n + c] - sum(a[i][k] * key[k * n + c] for k in range(n) if a[i][k])
    return tuple(m)


def _strip_right(group: WeylGroup, key: tuple) -> list:
    """Letters removed by repeatedly stripping the smallest right descent."""
    n = group.n
    out = []
    while True:
        desc = _negative_columns(key, n)
        if not desc:
            return out
        i = min(desc)
        out.append(i)
        key = _right_reflect(group, key, i)


def _inverse_key(group: WeylGroup, w: WeylElem) -> tuple:
    key = group.identity_key
    for i in reversed(w.word):
        key = _right_reflect(group, key, i)
    return key


class WeylGroup:
    """The Weyl group of a validated GCM, with an element registry and caches."""

    def __init__(self, gcm: GCM, ball_cap: int = DEFAULT_BALL_CAP):
        self.gcm = gcm
        self.n = gcm.n
        self.ball_cap = ball_cap
        self._table: dict[tuple, WeylElem] = {}
        self._balls: dict[frozenset, list[list[WeylElem]]] = {}
        self._roots_cache: dict[int, list[RootVector]] = {}
        # Scratch space for higher layers (faces, orders) keyed by their own tuples.
        self.memo: dict = {}
        n = self.n
        self.identity_key = tuple(int(r == c) for r in range(n) for c in range(n))
        self.identity = self._intern(self.identity_key)

    def __repr__(self) -> str:
        return f"WeylGroup({self.gcm.name or self.gcm.entries})"

    def _intern(self, key: tuple) -> WeylElem:
        w = self._table.get(key)
        if w is not None:
            return w
        # A reduced word for w read backwards gives w^{-1}; the canonical word of
        # w is the smallest-right-descent stripping sequence of w^{-1}.
        strip_w = _strip_right(self, key)
        inv_key = self.identity_key
        for i in strip_w:
            inv_key = _right_reflect(self, inv_key, i)
        canon = tuple(_strip_right(self, inv_key))
        w = WeylElem(self, key, canon, len(self._table))
        self._table[key] = w
        if inv_key != key:
            inv = self._table.get(inv_key)
            if inv is None:
                inv = WeylElem(self, inv_key, tuple(strip_w), len(self._table))
                self._table[inv_key] = inv
            w._inv, inv._inv = inv, w
        else:
            w._inv = w
        return w

    def gen(self, i: int) -> WeylElem:
        return self.identity.rmul(i)

    def from_word(self, word: Iterable[int]) -> WeylElem:
        w = self.identity
        for i in word:
            if not 0 <= i < self.n:
                raise ValueError(f"generator index {i} out of range")
            w = w.rmul(i)
        return w

    def from_matrix(self, key: Sequence[int]) -> WeylElem:
        return self._intern(tuple(key))

    def compose(self, u: WeylElem, v: WeylElem) -> WeylElem:
        if v.length <= u.length:
            for i in v.word:
                u = u.rmul(i)
            return u
        for i in reversed(u.word):
            v = v.lmul(i)
        return v

    def bruhat_leq(self, u: WeylElem, v: WeylElem) -> bool:
        """Bruhat order via the lifting property along left descents of v."""
        while True:
            lu, lv = len(u.word), len(v.word)
            if lu > lv:
                return False
            if lu == lv:
                return u is v
            if lu == 0:
                return True
            s = v.word[0]  # smallest left descent of v
            if s in u.left_descents():
                u = u.lmul(s)
            v = v.lmul(s)

    def coset_min(self, w: WeylElem, J: Iterable[int], side: str) -> WeylElem:
        """Minimal representative of w W_J (side='right') or W_J w (side='left')."""
        J = frozenset(J)
        if not J:
            return w
        if side == "right":
            while True:
                d = w.right_descents() & J
                if not d:
                    return w
                w = w.rmul(min(d))
        if side == "left":
            while True:
                d = w.left_descents() & J
                if not d:
                    return w
                w = w.lmul(min(d))
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def double_coset_min(self, J: Iterable[int], w: WeylElem, K: Iterable[int]) -> WeylElem:
        J, K = frozenset(J), frozenset(K)
        while True:
            dl = w.left_descents() & J
            if dl:
                w = w.lmul(min(dl))
                continue
            dr = w.right_descents() & K
            if dr:
                w = w.rmul(min(dr))
                continue
            return w

    def in_product_set(self, J: Iterable[int], w: WeylElem, K: Iterable[int]) -> bool:
        return self.double_coset_min(J, w, K).is_identity

    def split_letters(self, w: WeylElem, J: Iterable[int]) -> tuple[WeylElem, WeylElem]:
        """Split w into (letters in J, letters outside J).

        Only meaningful when the two letter sets commute elementwise.
        """
        J = frozenset(J)
        inside = self.from_word([i for i in w.word if i in J])
        outside = self.from_word([i for i in w.word if i not in J])
        return inside, outside

    def ball_layers(self, radius: int, mask: Iterable[int] | None = None) -> list[list[WeylElem]]:
        """Elements of W_mask grouped by length, up to the given radius."""
        mask = frozenset(range(self.n)) if mask is None else frozenset(mask)
        layers = self._balls.setdefault(mask, [[self.identity]])
        gens = sorted(mask)
        total = sum(len(x) for x in layers)
        while len(layers) <= radius:
            seen = set()
            nxt = []
            for w in layers[-1]:
                ld = w.left_descents()
                for i in gens:
                    if i not in ld:
                        u = w.lmul(i)
                        if u.uid not in seen:
                            seen.add(u.uid)
                            nxt.append(u)
            total += len(nxt)
            if total > self.ball_cap:
                raise ResourceBudgetExceeded(
                    f"ball of radius {len(layers)} exceeds cap of {self.ball_cap} elements"
                )
            nxt.sort(key=WeylElem.sort_key)
            layers.append(nxt)
            if not nxt:
                break
        return layers[: radius + 1]

    def ball(self, radius: int, mask: Iterable[int] | None = None) -> list[WeylElem]:
        """All elements of length at most ``radius``, sorted by (length, word)."""
        return [w for layer in self.ball_layers(radius, mask) for w in layer]

    # roots

    def reflect_root(self, i: int, beta: RootVector) -> RootVector:
        p = self.pairing(beta, i)
        if p == 0:
            return beta
        c = list(beta.coords)
        c[i] -= p
        return RootVector(tuple(c))

    def pairing(self, beta: RootVector, i: int) -> int:
        """<beta, alpha_i^vee> = sum_j c_j a_ij."""
        a = self.gcm.entries[i]
        return sum(c * a[j] for j, c in enumerate(beta.coords) if c)

    def act_on_root(self, w: WeylElem, beta: RootVector) -> RootVector:
        n = self.n
        k = w.key
        return RootVector(tuple(
            sum(k[r * n + c] * beta.coords[c] for c in range(n)) for r in range(n)
        ))

    def inversion_set(self, w: WeylElem) -> list[RootVector]:
        out = []
        prefix = self.identity
        for i in w.word:
            out.append(RootVector(prefix.column(i)))
            prefix = prefix.rmul(i)
        return out

    def is_real_root(self, beta: RootVector) -> bool:
        sign = beta.sign
        if sign == MIXED:
            raise NotARoot(f"{beta} has mixed or zero sign")
        if sign == NEGATIVE:
            beta = -beta
        while True:
            if beta.height == 1:
                return True
            for i in range(self.n):
                if self.pairing(beta, i) > 0:
                    beta = self.reflect_root(i, beta)
                    break
            else:
                return False
            if any(c < 0 for c in beta.coords):
                return False

    def in_WJJ(self, beta: RootVector, J: Iterable[int]) -> bool:
        """Membership in W_J{alpha_j : j in J} for a root with Positive/Negative sign."""
        return beta.support <= frozenset(J) and self.is_real_root(beta)

    def positive_real_roots(self, max_height: int) -> list[RootVector]:
        """Positive real roots of height at most ``max_height``, sorted by (height, coords)."""
        if max_height not in self._roots_cache:
            seen = {simple_root(self.n, i) for i in range(self.n)}
            queue = deque(sorted(seen, key=lambda b: b.coords, reverse=True))
            while queue:
                beta = queue.popleft()
                for i in range(self.n):
                    if self.pairing(beta, i) < 0:
                        gamma = self.reflect_root(i, beta)
                        if gamma.height <= max_height and gamma not in seen:
                            seen.add(gamma)
                            queue.append(gamma)
            self._roots_cache[max_height] = sorted(
                seen, key=lambda b: (b.height, tuple(-c for c in b.coords))
            )
        return list(self._roots_cache[max_height])


_GROUPS: dict[GCM, WeylGroup] = {}


def weyl_group(gcm: GCM) -> WeylGroup:
    """Shared group instance for a GCM, so that elements are interned once."""
    g = _GROUPS.get(gcm)
    if g is None:
        g = _GROUPS[gcm] = WeylGroup(gcm)
    return g


def compose(u: WeylElem, v: WeylElem) -> WeylElem:
    return u.group.compose(u, v)


def length(w: WeylElem) -> int:
    return w.length


def descents(w: WeylElem, side: str) -> frozenset:
    return w.descents(side)


def bruhat_leq(u: WeylElem, v: WeylElem) -> bool:
    return u.group.bruhat_leq(u, v)


def coset_min(w: WeylElem, J: Iterable[int], side: str) -> WeylElem:
    return w.group.coset_min(w, J, side)


def double_coset_min(J: Iterable[int], w: WeylElem, K: Iterable[int]) -> WeylElem:
    return w.group.double_coset_min(J, w, K)


def in_product_set(J: Iterable[int], w: WeylElem, K: Iterable[int]) -> bool:
    return w.group.in_product_set(J, w, K)


def enumerate_ball(group: WeylGroup, radius: int, mask: Iterable[int] | None = None) -> list[WeylElem]:
    return group.ball(radius, mask)
