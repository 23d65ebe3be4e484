"""Permutations in one-line notation, descent sets, tensor products and the
table of (descent set, inverse descent set) counts."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Iterable

from .compops import circ
from .compositions import Composition, DescentSet, composition_of, compositions
from .errors import ResourceLimitError

MAX_MATRIX_N = 9


class Permutation(tuple):
    """One-line notation with values 1..n."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images!r} is not a permutation of 1..{len(images)}")
        return super().__new__(cls, images)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        text = text.strip()
        if "," in text:
            return cls(int(t) for t in text.split(","))
        return cls(int(c) for c in text)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))


def descents(sigma) -> DescentSet:
    return DescentSet(len(sigma), tuple(i for i in range(1, len(sigma)) if sigma[i - 1] > sigma[i]))


def descent_composition(sigma) -> Composition:
    return composition_of(descents(sigma))


def tensor(sigma, tau) -> Permutation:
    n = len(tau)
    return Permutation((s - 1) * n + t for s in sigma for t in tau)


def tensor_by_matrix(sigma, tau) -> Permutation:
    """Row-read the grid of 1..mn after permuting rows by sigma and columns by tau."""
    m, n = len(sigma), len(tau)
    grid = [[i * n + j + 1 for j in range(n)] for i in range(m)]
    rows = [grid[s - 1] for s in sigma]
    return Permutation(row[t - 1] for row in rows for t in tau)


def star(sigma) -> Permutation:
    n = len(sigma)
    return Permutation(n + 1 - sigma[n - i] for i in range(1, n + 1))


def verify_tensor_descents(sigma, tau) -> bool:
    lhs = descent_composition(tensor(sigma, tau))
    return lhs == circ(descent_composition(sigma), descent_composition(tau))


def _count_block(n: int, first: int) -> Counter:
    counts: Counter = Counter()
    rest = [v for v in range(1, n + 1) if v != first]
    for tail in permutations(rest):
        sigma = (first,) + tail
        inv = [0] * n
        for i, v in enumerate(sigma, 1):
            inv[v - 1] = i
        d = tuple(i for i in range(1, n) if sigma[i - 1] > sigma[i])
        di = tuple(i for i in range(1, n) if inv[i - 1] > inv[i])
        counts[d, di] += 1
    return counts


def default_workers() -> int:
    return max(1, int(os.environ.get("RIBBONSCHUR_WORKERS", "1")))


def descent_pair_matrix(n: int, max_n: int = MAX_MATRIX_N,
                        workers: int | None = None) -> dict[tuple[Composition, Composition], int]:
    """N[alpha, beta] = #{sigma in S_n : d(sigma) = S(alpha), d(sigma^-1) = S(beta)}.

    Only nonzero entries are stored.  S_n is split by first value across
    ``workers`` processes; the merged counts do not depend on the split.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the enumeration limit {max_n}")
    workers = default_workers() if workers is None else workers
    total: Counter = Counter()
    if workers > 1 and n > 1:
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_count_block, [n] * n, range(1, n + 1)):
                total.update(part)
    else:
        for first in range(1, n + 1):
            total.update(_count_block(n, first))
    out = {}
    for (d, di), c in total.items():
        out[composition_of(d, n), composition_of(di, n)] = c
    return dict(sorted(out.items()))


def matrix_rows(N: dict, n: int) -> dict[Composition, tuple[int, ...]]:
    """Row of each beta: the counts N[alpha, beta] over alpha in lex order."""
    comps = compositions(n)
    return {beta: tuple(N.get((alpha, beta), 0) for alpha in comps) for beta in comps}


def matrix_to_json(N: dict, n: int) -> dict:
    comps = compositions(n)
    return {
        "n": n,
        "matrix": {
            alpha.to_text(): {beta.to_text(): N[alpha, beta] for beta in comps if (alpha, beta) in N}
            for alpha in comps
        },
    }
