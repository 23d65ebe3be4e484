"""Quasisymmetric functions of fixed degree in the monomial (M) and
fundamental (F) bases, with exact rational coefficients."""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Mapping

from .compositions import (
    Composition,
    Partition,
    coarsening_multiset,
    compositions,
    refinements,
    sort_to_partition,
)

BASES = ("M", "F")


def parse_rational(text) -> Fraction:
    if isinstance(text, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


class QsymExpr:
    """A homogeneous quasisymmetric function sum(c_beta B_beta), B in {M, F}.

    Zero coefficients are dropped; iteration is in lexicographic key order.
    """

    __slots__ = ("basis", "n", "terms")

    def __init__(self, basis: str, n: int, terms: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}, got {basis!r}")
        self.basis = basis
        self.n = n
        clean = {}
        for key, c in (terms or {}).items():
            key = Composition(key)
            if sum(key) != n:
                raise ValueError(f"key {key} does not have size {n}")
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: clean[k] for k in sorted(clean) if clean[k]}

    @classmethod
    def basis_element(cls, basis: str, beta) -> "QsymExpr":
        beta = Composition(beta)
        return cls(basis, beta.size, {beta: 1})

    @classmethod
    def one(cls, basis: str = "M") -> "QsymExpr":
        return cls(basis, 0, {Composition(): 1})

    def __getitem__(self, beta) -> Fraction:
        return self.terms.get(Composition(beta), Fraction(0))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "QsymExpr"):
        if self.basis != other.basis or self.n != other.n:
            raise ValueError(f"cannot combine {self.basis}/{self.n} with {other.basis}/{other.n}")

    def __add__(self, other: "QsymExpr") -> "QsymExpr":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return QsymExpr(self.basis, self.n, out)

    def __neg__(self) -> "QsymExpr":
        return QsymExpr(self.basis, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "QsymExpr") -> "QsymExpr":
        return self + (-other)

    def scale(self, q) -> "QsymExpr":
        q = Fraction(q)
        return QsymExpr(self.basis, self.n, {k: q * c for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QsymExpr):
            return NotImplemented
        if self.n != other.n:
            return not self.terms and not other.terms
        if self.basis == other.basis:
            return self.terms == other.terms
        return to_m(self).terms == to_m(other).terms

    def __hash__(self):
        m = to_m(self)
        return hash((m.n, tuple(m.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"QsymExpr({self.basis}, n={self.n}, 0)"
        body = " + ".join(f"{c}*{self.basis}_{k}" for k, c in self.terms.items())
        return f"QsymExpr({body})"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "terms": {k.to_text(): format_rational(c) for k, c in self.terms.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QsymExpr":
        n = int(data["n"])
        terms = {}
        for key, c in data["terms"].items():
            terms[Composition.parse(key) if key else Composition()] = parse_rational(c)
        return cls(data["basis"], n, terms)


def f_to_m(e: QsymExpr) -> QsymExpr:
    if e.basis != "F":
        raise ValueError("expected an F-basis expression")
    out: dict = defaultdict(Fraction)
    for beta, c in e.terms.items():
        for gamma in refinements(beta):
            out[gamma] += c
    return QsymExpr("M", e.n, out)


def m_to_f(e: QsymExpr) -> QsymExpr:
    if e.basis != "M":
        raise ValueError("expected an M-basis expression")
    out: dict = defaultdict(Fraction)
    for alpha, d in e.terms.items():
        for beta in refinements(alpha):
            sign = -1 if (len(alpha) - len(beta)) % 2 else 1
            out[beta] += sign * d
    return QsymExpr("F", e.n, out)


def to_m(e: QsymExpr) -> QsymExpr:
    return e if e.basis == "M" else f_to_m(e)


def to_f(e: QsymExpr) -> QsymExpr:
    return e if e.basis == "F" else m_to_f(e)


@lru_cache(maxsize=None)
def _overlapping_shuffles(alpha: tuple, beta: tuple) -> tuple:
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    out: Counter = Counter()
    a, b = alpha[0], beta[0]
    for w, c in _overlapping_shuffles(alpha[1:], beta):
        out[(a,) + w] += c
    for w, c in _overlapping_shuffles(alpha, beta[1:]):
        out[(b,) + w] += c
    for w, c in _overlapping_shuffles(alpha[1:], beta[1:]):
        out[(a + b,) + w] += c
    return tuple(out.items())


def quasi_shuffle_product(a: QsymExpr, b: QsymExpr) -> QsymExpr:
    """Product in the M basis: M_alpha M_beta sums over overlapping shuffles."""
    if a.basis != "M" or b.basis != "M":
        raise ValueError("quasi_shuffle_product works on M-basis expressions")
    out: dict = defaultdict(Fraction)
    for alpha, c in a.terms.items():
        for beta, d in b.terms.items():
            for w, k in _overlapping_shuffles(tuple(alpha), tuple(beta)):
                out[w] += c * d * k
    return QsymExpr("M", a.n + b.n, out)


def is_symmetric(e: QsymExpr) -> bool:
    m = to_m(e)
    fibres: dict = {}
    for beta in compositions(m.n):
        lam = sort_to_partition(beta)
        c = m[beta]
        if fibres.setdefault(lam, c) != c:
            return False
    return True


def monomial_sym(lam) -> QsymExpr:
    lam = Partition(lam)
    perms = {beta for beta in compositions(lam.size) if sort_to_partition(beta) == lam}
    return QsymExpr("M", lam.size, {beta: 1 for beta in perms})


def monomial_sym_in_F(lam) -> QsymExpr:
    """m_lambda in the F basis, read off coarsening-multiset multiplicities."""
    lam = Partition(lam)
    out = {}
    for beta in compositions(lam.size):
        mult = coarsening_multiset(beta)[lam]
        if mult:
            sign = -1 if (len(lam) - len(beta)) % 2 else 1
            out[beta] = sign * mult
    return QsymExpr("F", lam.size, out)


def complete_homogeneous(k: int) -> QsymExpr:
    """h_k as the sum of all M_beta with |beta| = k."""
    if k == 0:
        return QsymExpr.one("M")
    return QsymExpr("M", k, {beta: 1 for beta in compositions(k)})


def evaluate_polynomial(e: QsymExpr, nvars: int) -> dict[tuple, Fraction]:
    """Truncate to nvars variables; returns exponent tuple -> coefficient."""
    poly: dict = defaultdict(Fraction)
    for alpha, c in to_m(e).terms.items():
        if len(alpha) > nvars:
            continue
        for idx in combinations(range(nvars), len(alpha)):
            exps = [0] * nvars
            for i, a in zip(idx, alpha):
                exps[i] = a
            poly[tuple(exps)] += c
    return {k: v for k, v in poly.items() if v}


def polynomial_product(p: dict, q: dict) -> dict:
    out: dict = defaultdict(Fraction)
    for a, c in p.items():
        for b, d in q.items():
            out[tuple(x + y for x, y in zip(a, b))] += c * d
    return {k: v for k, v in out.items() if v}


__all__ = [
    "QsymExpr",
    "f_to_m",
    "m_to_f",
    "to_m",
    "to_f",
    "quasi_shuffle_product",
    "is_symmetric",
    "monomial_sym",
    "monomial_sym_in_F",
    "complete_homogeneous",
    "evaluate_polynomial",
    "polynomial_product",
]
