"""Symmetric functions: the complete homogeneous basis, skew Schur functions
via standard tableaux, ribbon Schur functions and Schur extraction."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping

from .compops import circ, concat, equivalent_by_factorization, near_concat
from .errors import NotSymmetricError, ResourceLimitError
from .compositions import (
    Composition,
    Partition,
    coarsenings,
    composition_of,
    compositions,
    descent_set,
    sort_to_partition,
)
from .qsym import (
    QsymExpr,
    complete_homogeneous,
    format_rational,
    m_to_f,
    parse_rational,
    quasi_shuffle_product,
    to_f,
)

MAX_TABLEAU_CELLS = 12


def _merge(lam, mu) -> Partition:
    return sort_to_partition(tuple(lam) + tuple(mu))


class SymHExpr:
    """sum(c_lambda h_lambda) over partitions lambda of n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping | None = None):
        self.n = n
        clean: dict = {}
        for lam, c in (terms or {}).items():
            lam = Partition(lam)
            if lam.size != n:
                raise ValueError(f"{lam} is not a partition of {n}")
            clean[lam] = clean.get(lam, 0) + Fraction(c)
        self.terms = {k: clean[k] for k in sorted(clean, reverse=True) if clean[k]}

    @classmethod
    def h(cls, lam) -> "SymHExpr":
        lam = sort_to_partition(lam)
        return cls(lam.size, {lam: 1})

    @classmethod
    def one(cls) -> "SymHExpr":
        return cls(0, {Partition(): 1})

    def __getitem__(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def __add__(self, other: "SymHExpr") -> "SymHExpr":
        if not self.terms:
            return other
        if not other.terms:
            return self
        if self.n != other.n:
            raise ValueError("degree mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SymHExpr(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, q) -> "SymHExpr":
        q = Fraction(q)
        return SymHExpr(self.n, {k: q * c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "SymHExpr") -> "SymHExpr":
        out: dict = defaultdict(Fraction)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                out[_merge(a, b)] += c * d
        return SymHExpr(self.n + other.n, out)

    def __pow__(self, m: int) -> "SymHExpr":
        out = SymHExpr.one()
        for _ in range(m):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymHExpr):
            return NotImplemented
        return self.terms == other.terms and (self.n == other.n or not self.terms)

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "SymHExpr(0)"
        return "SymHExpr(" + " + ".join(f"{c}*h_{k}" for k, c in self.terms.items()) + ")"

    def to_json(self) -> dict:
        return {
            "basis": "h",
            "n": self.n,
            "terms": {k.to_text(): format_rational(c) for k, c in self.terms.items()},
        }


def h_to_qsym(e: SymHExpr) -> QsymExpr:
    """Image in the M basis, multiplying out h_k = sum of all M_beta."""
    total = QsymExpr("M", e.n)
    for lam, c in e.terms.items():
        term = QsymExpr.one("M")
        for k in lam:
            term = quasi_shuffle_product(term, complete_homogeneous(k))
        total = total + term.scale(c)
    return total


# ---------------------------------------------------------------- shapes

@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        outer, inner = Partition(self.outer), Partition(self.inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ValueError(f"{inner} does not fit inside {outer}")
        if outer.size - inner.size < 1:
            raise ValueError("skew shape must have at least one cell")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner) if inner.strip() else Partition())

    def row_start(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, lam in enumerate(self.outer) for j in range(self.row_start(i), lam)]

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __str__(self):
        return f"{self.outer}/{self.inner}" if self.inner else f"{self.outer}"


@dataclass(frozen=True)
class StandardTableau:
    shape: SkewShape
    entries: tuple[tuple[tuple[int, int], int], ...]

    def descents(self) -> tuple[int, ...]:
        row_of = {v: cell[0] for cell, v in self.entries}
        return tuple(i for i in range(1, len(row_of)) if row_of[i + 1] > row_of[i])


def ribbon_shape(beta) -> SkewShape:
    """Skew shape whose rows, read bottom to top, have lengths beta_1, ..., beta_k."""
    beta = Composition(beta)
    spans = []
    start = 0
    for part in beta:
        spans.append((start, start + part))
        start += part - 1
    spans.reverse()
    return SkewShape(Partition(b for _, b in spans), Partition(a for a, _ in spans if a))


def standard_tableaux(shape: SkewShape, max_cells: int = MAX_TABLEAU_CELLS) -> Iterator[StandardTableau]:
    """Depth-first enumeration, placing 1, 2, ... into addable cells in reading order."""
    if shape.size > max_cells:
        raise ResourceLimitError(f"shape has {shape.size} cells, limit is {max_cells}")
    cells = shape.cells()
    cellset = set(cells)
    filled: dict = {}

    def addable(cell):
        i, j = cell
        if cell in filled:
            return False
        left, up = (i, j - 1), (i - 1, j)
        return (left not in cellset or left in filled) and (up not in cellset or up in filled)

    def rec(k):
        if k > len(cells):
            yield StandardTableau(shape, tuple(sorted(filled.items())))
            return
        for cell in cells:
            if addable(cell):
                filled[cell] = k
                yield from rec(k + 1)
                del filled[cell]

    yield from rec(1)


@lru_cache(maxsize=None)
def _skew_schur_terms(shape: SkewShape, max_cells: int) -> tuple:
    counts: dict = defaultdict(int)
    n = shape.size
    for T in standard_tableaux(shape, max_cells):
        counts[composition_of(T.descents(), n)] += 1
    return tuple(counts.items())


def skew_schur_in_F(shape: SkewShape, max_cells: int = MAX_TABLEAU_CELLS) -> QsymExpr:
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    return QsymExpr("F", shape.size, dict(_skew_schur_terms(shape, max_cells)))


def schur_in_F(lam) -> QsymExpr:
    return skew_schur_in_F(SkewShape(Partition(lam)))


def ribbon_in_F(beta) -> QsymExpr:
    return skew_schur_in_F(ribbon_shape(beta))


# ---------------------------------------------------------------- h-basis routes

def ribbon_in_h(alpha) -> SymHExpr:
    """Alternating sum of h over the sorted coarsenings of alpha."""
    alpha = Composition(alpha)
    out: dict = defaultdict(Fraction)
    for beta in coarsenings(alpha):
        sign = -1 if (len(alpha) - len(beta)) % 2 else 1
        out[sort_to_partition(beta)] += sign
    return SymHExpr(alpha.size, out)


def ribbon_product_terms(alpha, beta) -> dict[Composition, int]:
    """r_alpha r_beta as a formal sum of ribbons."""
    out: dict = defaultdict(int)
    out[concat(alpha, beta)] += 1
    out[near_concat(alpha, beta)] += 1
    return dict(out)


def ribbon_product(alpha, beta) -> SymHExpr:
    total = SymHExpr(sum(alpha) + sum(beta))
    for gamma, c in ribbon_product_terms(alpha, beta).items():
        total = total + ribbon_in_h(gamma).scale(c)
    return total


def _h_of(k: int) -> SymHExpr | None:
    if k < 0:
        return None
    if k == 0:
        return SymHExpr.one()
    return SymHExpr.h((k,))


def jacobi_trudi(shape: SkewShape) -> SymHExpr:
    """det(h_{lambda_i - mu_j - i + j}) by Laplace expansion along rows."""
    lam = list(shape.outer)
    k = len(lam)
    mu = list(shape.inner) + [0] * (k - len(shape.inner))

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> SymHExpr:
        if row == k:
            return SymHExpr.one()
        total = SymHExpr(0)
        for pos, j in enumerate(sorted(cols)):
            entry = _h_of(lam[row] - mu[j] - row + j)
            if entry is None:
                continue
            sub = entry * minor(row + 1, cols - {j})
            total = total + (sub if pos % 2 == 0 else -sub)
        return total

    return minor(0, frozenset(range(k)))


def ribbon_equal(beta, gamma, route: str = "h") -> bool:
    """Equality of ribbon Schur functions.

    route "h" compares h-expansions, "F" compares tableau F-expansions and
    "factorization" uses the composition factorization.
    """
    if sum(beta) != sum(gamma):
        return False
    if route == "h":
        return ribbon_in_h(beta) == ribbon_in_h(gamma)
    if route == "F":
        return ribbon_in_F(beta) == ribbon_in_F(gamma)
    if route == "factorization":
        return equivalent_by_factorization(beta, gamma)
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------- Schur basis

def lambda_tilde(lam) -> Composition:
    """Descent composition of the column-filled tableau of shape lam."""
    lam = Partition(lam)
    n = lam.size
    S = set(descent_set(lam.conjugate()))
    return composition_of([x for x in range(1, n) if x not in S], n)


def spread(e: QsymExpr) -> tuple[Composition, Composition]:
    e = to_f(e)
    if not e.terms:
        raise ValueError("the zero function has no spread")
    keys = list(e.terms)
    return keys[0], keys[-1]


def schur_extract(e: QsymExpr) -> dict[Partition, Fraction]:
    """Coefficients c with e = sum(c_lambda s_lambda).

    Peels the lexicographically largest term, which for a symmetric function
    is always led by a Schur function with unit leading coefficient.
    """
    residual = to_f(e)
    out: dict = {}
    while residual.terms:
        top = next(reversed(residual.terms))
        c = residual.terms[top]
        if tuple(top) != tuple(sorted(top, reverse=True)):
            raise NotSymmetricError("input not symmetric")
        lam = Partition(top)
        out[lam] = c
        residual = residual - schur_in_F(lam).scale(c)
    return {k: out[k] for k in sorted(out, reverse=True)}


def schur_to_F(coeffs: Mapping, n: int) -> QsymExpr:
    total = QsymExpr("F", n)
    for lam, c in coeffs.items():
        total = total + schur_in_F(lam).scale(c)
    return total


def ribbon_lr_coeffs(beta) -> dict[Partition, int]:
    coeffs = schur_extract(ribbon_in_F(beta))
    out = {}
    for lam, c in coeffs.items():
        if c.denominator != 1 or c < 0:
            raise AssertionError(f"non-integral or negative coefficient {c} at {lam}")
        out[lam] = int(c)
    return out


def skew_lr_coeffs(shape: SkewShape) -> dict[Partition, Fraction]:
    return schur_extract(skew_schur_in_F(shape))


def verify_plethysm_average(m: int, beta, max_size: int = 20) -> bool:
    """Check sum over alpha |= m of r_{alpha o beta} against r_beta ** m in the h basis."""
    beta = Composition(beta)
    if m * beta.size > max_size:
        raise ResourceLimitError(f"m*|beta| = {m * beta.size} exceeds {max_size}")
    lhs = SymHExpr(m * beta.size)
    for alpha in compositions(m):
        lhs = lhs + ribbon_in_h(circ(alpha, beta))
    return lhs == ribbon_in_h(beta) ** m


def h_to_F(e: SymHExpr) -> QsymExpr:
    return m_to_f(h_to_qsym(e))


def schur_coeffs_to_json(coeffs: Mapping) -> dict[str, str]:
    return {Partition(k).to_text(): format_rational(v) for k, v in sorted(coeffs.items(), reverse=True)}


def schur_coeffs_from_json(data: Mapping) -> dict[Partition, Fraction]:
    return {Partition.parse(k): parse_rational(v) for k, v in data.items()}


__all__ = [
    "SymHExpr",
    "SkewShape",
    "StandardTableau",
    "ResourceLimitError",
    "NotSymmetricError",
    "ribbon_shape",
    "standard_tableaux",
    "skew_schur_in_F",
    "schur_in_F",
    "ribbon_in_F",
    "ribbon_in_h",
    "ribbon_product",
    "ribbon_product_terms",
    "jacobi_trudi",
    "ribbon_equal",
    "lambda_tilde",
    "spread",
    "schur_extract",
    "schur_to_F",
    "ribbon_lr_coeffs",
    "skew_lr_coeffs",
    "verify_plethysm_average",
    "h_to_qsym",
    "h_to_F",
]
