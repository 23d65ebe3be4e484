"""The cone of symmetric functions with nonnegative F-expansion.

Points are written in Schur coordinates c = (c_lambda), lambda in descending
lexicographic order.  The cone is cut out by one inequality
sum_lambda c_lambda [s_lambda]_{F_beta} >= 0 per equivalence class of
compositions beta.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .compops import equivalence_class
from .compositions import (
    Composition,
    Partition,
    coarsening_multiset,
    composition_of,
    compositions,
    multiset_key,
    partitions,
)
from .errors import ResourceLimitError
from .linalg import dot, inverse, nullspace, primitive, rank
from .qsym import QsymExpr, format_rational, is_symmetric, parse_rational, to_f
from .simplex import find_nonnegative_solution
from .sym import schur_in_F

MAX_RAY_N = 8


@dataclass(frozen=True)
class RayMatrix:
    """Entries [s_lambda]_{F_beta}; rows are partitions, columns compositions."""

    n: int
    rows: tuple[Partition, ...]
    columns: tuple[Composition, ...]
    entries: tuple[tuple[int, ...], ...]

    def entry(self, lam, beta) -> int:
        return self.entries[self.rows.index(Partition(lam))][self.columns.index(Composition(beta))]

    def column(self, beta) -> tuple[int, ...]:
        j = self.columns.index(Composition(beta))
        return tuple(row[j] for row in self.entries)


@lru_cache(maxsize=None)
def ray_matrix(n: int, max_n: int = MAX_RAY_N) -> RayMatrix:
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the limit {max_n}")
    lams = tuple(partitions(n))
    comps = tuple(compositions(n))
    entries = []
    for lam in lams:
        s = schur_in_F(lam)
        entries.append(tuple(int(s[beta]) for beta in comps))
    return RayMatrix(n, lams, comps, tuple(entries))


def cone_vector(beta) -> dict[Partition, int]:
    """Multiplicities of each partition of |beta| among beta's sorted coarsenings."""
    beta = Composition(beta)
    m = coarsening_multiset(beta)
    return {lam: m[lam] for lam in partitions(beta.size) if m[lam]}


def cone_vector_dense(beta) -> tuple[int, ...]:
    m = coarsening_multiset(beta)
    return tuple(m[lam] for lam in partitions(sum(beta)))


def class_representatives(n: int) -> list[Composition]:
    """Lex-smallest member of each equivalence class, in ascending lex order."""
    seen = {}
    for beta in compositions(n):
        seen.setdefault(multiset_key(beta), beta)
    return sorted(seen.values())


def inequalities(n: int) -> list[tuple[Composition, tuple[int, ...]]]:
    """One inequality row per equivalence class, deduplicated on the cone vector."""
    rm = ray_matrix(n)
    return [(beta, rm.column(beta)) for beta in class_representatives(n)]


# ---------------------------------------------------------------- rays

@dataclass(frozen=True)
class Ray:
    n: int
    schur: tuple[tuple[Partition, int], ...]
    fundamental: tuple[tuple[Composition, int], ...] = field(compare=False)

    @classmethod
    def from_vector(cls, n: int, vec: Iterable) -> "Ray":
        lams = list(partitions(n))
        coeffs = primitive(vec)
        schur = tuple((lam, c) for lam, c in zip(lams, coeffs) if c)
        f = QsymExpr("F", n)
        for lam, c in schur:
            f = f + schur_in_F(lam).scale(c)
        return cls(n, schur, tuple((k, int(v)) for k, v in f.terms.items()))

    def vector(self) -> tuple[int, ...]:
        d = dict(self.schur)
        return tuple(d.get(lam, 0) for lam in partitions(self.n))

    @property
    def is_schur(self) -> bool:
        return len(self.schur) == 1 and self.schur[0][1] == 1

    def to_json(self) -> dict:
        return {
            "schur": {lam.to_text(): str(c) for lam, c in self.schur},
            "fundamental": {beta.to_text(): str(c) for beta, c in self.fundamental},
        }

    def __str__(self):
        parts = []
        for lam, c in self.schur:
            coef = "" if c == 1 else "-" if c == -1 else f"{c}"
            parts.append(f"{coef}s_{lam}")
        return " + ".join(parts).replace("+ -", "- ")


def _sort_rays(n: int, vectors) -> list[Ray]:
    rays = {primitive(v) for v in vectors}
    return [Ray.from_vector(n, v) for v in sorted(rays, reverse=True)]


def extreme_rays(n: int, max_n: int = 7) -> list[Ray]:
    """Extreme rays by the double description method.

    Inequalities are added in ascending lex order of their representatives.
    Two rays are combined only when they are adjacent, which is decided by the
    exact rank of the inequalities tight at both.
    """
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the limit {max_n}")
    rows = [row for _, row in inequalities(n)]
    d = len(rows[0])

    # start from the first d linearly independent inequalities
    start = []
    for i, row in enumerate(rows):
        if rank([rows[j] for j in start] + [row]) > len(start):
            start.append(i)
        if len(start) == d:
            break
    inv = inverse([rows[i] for i in start])
    rays = [tuple(inv[r][c] for r in range(d)) for c in range(d)]
    rays = [tuple(Fraction(x) for x in primitive(v)) for v in rays]
    done = list(start)

    for i, row in enumerate(rows):
        if i in start:
            continue
        values = [dot(row, r) for r in rays]
        pos = [r for r, v in zip(rays, values) if v > 0]
        neg = [r for r, v in zip(rays, values) if v < 0]
        keep = [r for r, v in zip(rays, values) if v >= 0]
        tight = {r: frozenset(j for j in done if dot(rows[j], r) == 0) for r in pos + neg}
        for p in pos:
            for q in neg:
                common = tight[p] & tight[q]
                if len(common) < d - 2:
                    continue
                if rank([rows[j] for j in common]) != d - 2:
                    continue
                a, b = dot(row, p), dot(row, q)
                new = tuple(a * y - b * x for x, y in zip(p, q))
                keep.append(tuple(Fraction(x) for x in primitive(new)))
        rays = list(dict.fromkeys(keep))
        done.append(i)
    return _sort_rays(n, rays)


def extreme_rays_by_intersection(n: int, max_n: int = 5) -> list[Ray]:
    """Extreme rays by trying every set of d-1 inequalities (slow; cross-check only)."""
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the limit {max_n}")
    rows = [row for _, row in inequalities(n)]
    d = len(rows[0])
    found = set()
    for subset in combinations(range(len(rows)), d - 1):
        sub = [rows[j] for j in subset]
        basis = nullspace(sub, d)
        if len(basis) != 1:
            continue
        v = basis[0]
        for cand in (v, [-x for x in v]):
            if all(dot(r, cand) >= 0 for r in rows):
                found.add(primitive(cand))
    return _sort_rays(n, found)


def is_extreme_ray(n: int, vec) -> bool:
    """A nonzero cone point is extreme iff its tight inequalities have rank d-1."""
    rows = [row for _, row in inequalities(n)]
    if any(dot(r, vec) < 0 for r in rows):
        return False
    tight = [r for r in rows if dot(r, vec) == 0]
    return rank(tight) == len(rows[0]) - 1


# ---------------------------------------------------------------- facets

def is_extreme_vector(alpha, max_n: int = 8) -> bool:
    """True if v_alpha is outside the convex hull of v_beta over beta not equivalent to alpha."""
    alpha = Composition(alpha)
    n = alpha.size
    if n > max_n:
        raise ResourceLimitError(f"n = {n} exceeds the limit {max_n}")
    target = cone_vector_dense(alpha)
    key = multiset_key(alpha)
    others = [cone_vector_dense(b) for b in class_representatives(n) if multiset_key(b) != key]
    if not others:
        return True
    A = [[v[i] for v in others] for i in range(len(target))] + [[1] * len(others)]
    return find_nonnegative_solution(A, list(target) + [1]) is None


def is_redundant_inequality(alpha) -> bool:
    """True if the inequality of alpha is a nonnegative combination of the others."""
    alpha = Composition(alpha)
    n = alpha.size
    key = multiset_key(alpha)
    rm = ray_matrix(n)
    target = rm.column(alpha)
    others = [rm.column(b) for b in class_representatives(n) if multiset_key(b) != key]
    if not others:
        return False
    A = [[v[i] for v in others] for i in range(len(target))]
    return find_nonnegative_solution(A, list(target)) is not None


def facet_report(n: int) -> dict:
    """Irredundancy of every inequality class; a finite check of an open conjecture."""
    reps = class_representatives(n)
    classes = []
    for alpha in reps:
        classes.append({
            "representative": alpha.to_text(),
            "class": [b.to_text() for b in equivalence_class(alpha)],
            "redundant": is_redundant_inequality(alpha),
            "vector_extreme": is_extreme_vector(alpha),
        })
    redundant = sum(c["redundant"] for c in classes)
    non_extreme = sum(not c["vector_extreme"] for c in classes)
    agree = all(c["redundant"] != c["vector_extreme"] for c in classes)
    if redundant == 0 and non_extreme == 0:
        status = "verified at this scale"
    else:
        status = "counterexample at this scale"
    return {
        "n": n,
        "conjecture": "inequality classes are irredundant (facets biject with equivalence classes)",
        "status": status,
        "compositions": 2 ** (n - 1),
        "inequality_classes": len(reps),
        "redundant_count": redundant,
        "non_extreme_vector_count": non_extreme,
        "routes_agree": agree,
        "dimension": rank([ray_matrix(n).column(b) for b in compositions(n)]),
        "classes": classes,
    }


# ---------------------------------------------------------------- multicollections

@dataclass(frozen=True)
class Multicollection:
    """Rational weights on subsets of [n]; indexes a function of degree n + 1."""

    n: int
    weights: tuple[tuple[frozenset, Fraction], ...]

    @classmethod
    def from_mapping(cls, n: int, weights: Mapping) -> "Multicollection":
        clean = {}
        for S, k in weights.items():
            S = frozenset(S)
            if any(not 1 <= x <= n for x in S):
                raise ValueError(f"{sorted(S)} is not a subset of [{n}]")
            k = Fraction(k)
            if k:
                clean[S] = clean.get(S, 0) + k
        items = sorted(((S, k) for S, k in clean.items() if k), key=lambda t: (len(t[0]), sorted(t[0])))
        return cls(n, tuple(items))

    @classmethod
    def from_qsym(cls, e: QsymExpr) -> "Multicollection":
        """Weights k_S = coefficient of F_{beta(S)}; requires an F-basis input of degree >= 1."""
        e = to_f(e)
        return cls.from_mapping(e.n - 1, {frozenset(_subset(beta)): c for beta, c in e.terms.items()})

    def to_qsym(self) -> QsymExpr:
        return QsymExpr("F", self.n + 1, {composition_of(sorted(S), self.n + 1): k for S, k in self.weights})

    def to_json(self) -> dict:
        return {"n": self.n, "weights": {",".join(map(str, sorted(S))): format_rational(k) for S, k in self.weights}}

    @classmethod
    def from_json(cls, data: Mapping) -> "Multicollection":
        n = int(data["n"])
        weights = {}
        for key, k in data["weights"].items():
            S = frozenset(int(t) for t in key.split(",")) if key.strip() else frozenset()
            weights[S] = parse_rational(k)
        return cls.from_mapping(n, weights)


def _subset(beta: Composition) -> list[int]:
    out, s = [], 0
    for p in beta[:-1]:
        s += p
        out.append(s)
    return out


def profile(S: Iterable[int], n: int) -> tuple[int, ...]:
    """Run lengths of S in decreasing order, padded with zeros to n + 1 - |S| entries."""
    S = sorted(set(S))
    runs = []
    prev = None
    for x in S:
        if prev is not None and x == prev + 1:
            runs[-1] += 1
        else:
            runs.append(1)
        prev = x
    runs.sort(reverse=True)
    return tuple(runs) + (0,) * (n + 1 - len(S) - len(runs))


def f_lambda(lam, n: int | None = None) -> list[frozenset]:
    """Subsets of [n] whose profile is lam minus one in every part; lam is a partition of n + 1."""
    lam = Partition(lam)
    if n is None:
        n = lam.size - 1
    return list(_f_lambda(lam, n))


@lru_cache(maxsize=None)
def _f_lambda(lam: Partition, n: int) -> tuple[frozenset, ...]:
    if lam.size != n + 1:
        raise ValueError(f"{lam} is not a partition of {n + 1}")
    target = tuple(p - 1 for p in lam)
    out = []
    for mask in range(1 << n):
        S = [x for x in range(1, n + 1) if mask >> (x - 1) & 1]
        if profile(S, n) == target:
            out.append(frozenset(S))
    return tuple(sorted(out, key=lambda S: (len(S), sorted(S))))


def covering_sum(mc: Multicollection, T: frozenset) -> Fraction:
    return sum((k for S, k in mc.weights if T <= S), Fraction(0))


def balanced_check(mc: Multicollection, lam) -> Fraction | None:
    """The common covering sum over F_lambda, or None if it is not constant."""
    values = {covering_sum(mc, T) for T in f_lambda(lam, mc.n)}
    if len(values) != 1:
        return None
    return values.pop()


def fully_balanced(mc: Multicollection) -> bool:
    return all(balanced_check(mc, lam) is not None for lam in partitions(mc.n + 1))


def kappa_values(mc: Multicollection) -> dict[Partition, Fraction | None]:
    return {lam: balanced_check(mc, lam) for lam in partitions(mc.n + 1)}


def symmetric_via_multicollection(mc: Multicollection) -> bool:
    return is_symmetric(mc.to_qsym())


__all__ = [
    "RayMatrix",
    "Ray",
    "Multicollection",
    "ray_matrix",
    "cone_vector",
    "cone_vector_dense",
    "class_representatives",
    "inequalities",
    "extreme_rays",
    "extreme_rays_by_intersection",
    "is_extreme_ray",
    "is_extreme_vector",
    "is_redundant_inequality",
    "facet_report",
    "profile",
    "f_lambda",
    "balanced_check",
    "fully_balanced",
    "kappa_values",
]
