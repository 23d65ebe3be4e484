"""Compositions, partitions and the coarsening multiset.

A composition is stored as a tuple subclass, so Python's tuple ordering is the
lexicographic order used throughout (compositions of equal size can never be
proper prefixes of each other).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator


class Composition(tuple):
    """An ordered tuple of positive integers.

    The empty composition is accepted; it only ever appears as the index of
    the unit in degree 0.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"composition parts must be positive, got {parts!r}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @classmethod
    def parse(cls, text: str) -> "Composition":
        """Read "2,2,1,2" or the compact form "2212"."""
        text = text.strip()
        if not text:
            raise ValueError("empty composition")
        if "," in text:
            return cls(int(t) for t in text.split(","))
        if not text.isdigit():
            raise ValueError(f"cannot parse composition {text!r}")
        return cls(int(c) for c in text)

    def to_text(self) -> str:
        return ",".join(map(str, self))

    def __str__(self) -> str:
        if all(p <= 9 for p in self):
            return "".join(map(str, self))
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


class Partition(Composition):
    """A weakly decreasing composition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        for a, b in zip(self, self[1:]):
            if a < b:
                raise ValueError(f"partition parts must weakly decrease, got {tuple(self)!r}")
        return self

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))


@dataclass(frozen=True)
class DescentSet:
    """A subset of [n-1], stored sorted."""

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(sorted(set(self.elements)))
        for e in elems:
            if not 1 <= e <= self.n - 1:
                raise ValueError(f"{e} is not in [1, {self.n - 1}]")
        object.__setattr__(self, "elements", elems)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def descent_set(beta: Composition) -> DescentSet:
    n = sum(beta)
    return DescentSet(n, tuple(accumulate(beta))[:-1])


def composition_of(S: DescentSet | Iterable[int], n: int | None = None) -> Composition:
    """Inverse of :func:`descent_set`; ``n`` is required for a bare iterable."""
    if isinstance(S, DescentSet):
        n, elems = S.n, S.elements
    else:
        if n is None:
            raise TypeError("n is required when S is not a DescentSet")
        elems = DescentSet(n, tuple(S)).elements
    cuts = (0,) + elems + (n,)
    return Composition(b - a for a, b in zip(cuts, cuts[1:]))


def reverse(beta: Composition) -> Composition:
    return Composition(beta[::-1])


def sort_to_partition(beta: Iterable[int]) -> Partition:
    return Partition(sorted(beta, reverse=True))


def lex_compare(beta: Composition, gamma: Composition) -> int:
    """Return -1, 0 or 1 as beta precedes, equals or follows gamma."""
    beta, gamma = tuple(beta), tuple(gamma)
    return (beta > gamma) - (beta < gamma)


def coarsenings(beta: Composition) -> list[Composition]:
    """All coarsenings of beta, one per subset of the l-1 merge positions.

    Bit i of the counter merges part i with part i+1; counter 0 is beta itself.
    """
    k = len(beta)
    if k == 0:
        return [Composition()]
    out = []
    for mask in range(1 << (k - 1)):
        parts = [beta[0]]
        for i in range(1, k):
            if mask >> (i - 1) & 1:
                parts[-1] += beta[i]
            else:
                parts.append(beta[i])
        out.append(Composition(parts))
    return out


def refinements(beta: Composition) -> list[Composition]:
    """All compositions gamma with gamma <= beta in the coarsening order."""
    beta = Composition(beta)
    S = set(descent_set(beta))
    free = [x for x in range(1, beta.size) if x not in S]
    out = []
    for mask in range(1 << len(free)):
        extra = [x for i, x in enumerate(free) if mask >> i & 1]
        out.append(composition_of(sorted(S.union(extra)), beta.size))
    return out


def is_coarsening(alpha: Composition, beta: Composition) -> bool:
    """True when alpha >= beta, i.e. alpha is obtained by merging parts of beta."""
    if sum(alpha) != sum(beta):
        return False
    return set(descent_set(alpha)) <= set(descent_set(beta))


def coarsening_multiset(beta: Composition) -> Counter:
    """The multiset M(beta) of sorted coarsenings, as a Counter of Partitions."""
    return _coarsening_multiset(Composition(beta)).copy()


@lru_cache(maxsize=None)
def _coarsening_multiset(beta: Composition) -> Counter:
    return Counter(sort_to_partition(a) for a in coarsenings(beta))


def multiset_key(beta: Composition) -> tuple:
    """Hashable canonical form of M(beta); equal keys iff equal multisets."""
    return tuple(sorted(_coarsening_multiset(Composition(beta)).items(), reverse=True))


def multiset_to_json(counts: Counter) -> dict[str, int]:
    return {Partition(lam).to_text(): counts[lam] for lam in sorted(counts, reverse=True)}


def compositions(n: int) -> list[Composition]:
    """All compositions of n in lexicographic order."""
    if n == 0:
        return [Composition()]
    out = [composition_of([x for x in range(1, n) if mask >> (x - 1) & 1], n)
           for mask in range(1 << (n - 1))]
    return sorted(out)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in descending lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@dataclass(frozen=True)
class TypeProfile:
    """Types and the signed functions g, h of a composition on [n-1].

    Values at arbitrary integers reduce mod n; multiples of n have type 0.
    """

    n: int
    types: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]

    def _index(self, x: int) -> int | None:
        r = x % self.n
        return None if r == 0 else r - 1

    def type_at(self, x: int) -> int:
        i = self._index(x)
        return 0 if i is None else self.types[i]

    def g_at(self, x: int) -> int:
        i = self._index(x)
        return 0 if i is None else self.g[i]

    def h_at(self, x: int) -> int:
        i = self._index(x)
        return 0 if i is None else self.h[i]

    @staticmethod
    def signs(values: Iterable[int]) -> str:
        """Render values as the compact string used for g and h, e.g. "+-0+2"."""
        return "".join({1: "+", -1: "-", 0: "0", 2: "2"}[v] for v in values)


def type_profile(beta: Composition) -> TypeProfile:
    n = sum(beta)
    S = set(descent_set(beta))
    types, g, h = [], [], []
    for i in range(1, n):
        if 2 * i == n:
            t = 2 * (i in S)
        else:
            t = (i in S) + (n - i in S)
        sign = 1 if i in S else -1
        types.append(t)
        h.append(sign if t == 1 else t)
        g.append(sign if t == 1 else 0)
    return TypeProfile(n, tuple(types), tuple(g), tuple(h))
