"""The monoid of compositions under the composition product ``circ``.

``circ(alpha, beta)`` glues ``alpha_i`` near-concatenated copies of ``beta`` for
each part of ``alpha`` and concatenates the blocks.  Every composition has a
unique irreducible factorization under ``circ``, and two compositions have the
same coarsening multiset exactly when their factorizations agree up to
reversing individual factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product

from .compositions import (
    Composition,
    composition_of,
    multiset_key,
    reverse,
    type_profile,
)


def concat(alpha: Composition, beta: Composition) -> Composition:
    return Composition(tuple(alpha) + tuple(beta))


def near_concat(alpha: Composition, beta: Composition) -> Composition:
    if not alpha:
        return Composition(beta)
    if not beta:
        return Composition(alpha)
    return Composition(alpha[:-1] + (alpha[-1] + beta[0],) + beta[1:])


def near_power(beta: Composition, m: int) -> Composition:
    """beta near-concatenated with itself m times."""
    out = Composition(beta)
    for _ in range(m - 1):
        out = near_concat(out, beta)
    return out


def circ(alpha: Composition, beta: Composition) -> Composition:
    blocks = [near_power(beta, a) for a in alpha]
    return reduce(concat, blocks, Composition())


def circ_all(factors) -> Composition:
    factors = list(factors)
    if not factors:
        return Composition((1,))
    return reduce(circ, factors)


def is_trivial_pair(delta: Composition, eps: Composition) -> bool:
    if tuple(delta) == (1,) or tuple(eps) == (1,):
        return True
    if len(delta) == 1 and len(eps) == 1:
        return True
    return all(p == 1 for p in delta) and all(p == 1 for p in eps)


def try_split(beta: Composition, p: int) -> tuple[Composition, Composition] | None:
    """Find delta, eps with circ(delta, eps) == beta and |eps| == p, if any.

    The candidate is read off h (its positive values mark the descent set),
    then confirmed by recomposing.
    """
    beta = Composition(beta)
    n = beta.size
    if p < 1 or n % p:
        raise ValueError(f"{p} does not divide |{beta}| = {n}")
    if not 1 < p < n:
        raise ValueError(f"split size must satisfy 1 < p < {n}, got {p}")
    prof = type_profile(beta)
    eps = composition_of([x for x in range(1, p) if prof.h_at(x) in (1, 2)], p)
    delta = composition_of([y for y in range(1, n // p) if prof.h_at(p * y) in (1, 2)], n // p)
    if circ(delta, eps) != beta:
        return None
    return delta, eps


def _nontrivial_split(beta: Composition, from_right: bool = True):
    n = beta.size
    sizes = [p for p in range(2, n) if n % p == 0]
    if not from_right:
        # peel the left factor first: smallest |delta| means largest |eps|
        sizes.reverse()
    for p in sizes:
        split = try_split(beta, p)
        if split is not None and not is_trivial_pair(*split):
            return split
    return None


def _raw_factors(beta: Composition, from_right: bool) -> list[Composition]:
    split = _nontrivial_split(beta, from_right)
    if split is None:
        return [beta]
    delta, eps = split
    return _raw_factors(delta, from_right) + _raw_factors(eps, from_right)


def _merge_trivial(factors: list[Composition]) -> list[Composition]:
    factors = [f for f in factors if tuple(f) != (1,)] or [Composition((1,))]
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if is_trivial_pair(a, b):
                factors[i:i + 2] = [circ(a, b)]
                changed = True
                break
    return factors


@dataclass(frozen=True)
class Factorization:
    factors: tuple[Composition, ...]

    @property
    def symmetric_flags(self) -> tuple[bool, ...]:
        return tuple(f == reverse(f) for f in self.factors)

    @property
    def r(self) -> int:
        """Number of factors that differ from their reversal."""
        return sum(not s for s in self.symmetric_flags)

    def compose(self) -> Composition:
        return circ_all(self.factors)


def irreducible_factorization(beta: Composition, from_right: bool = True) -> Factorization:
    beta = Composition(beta)
    if not beta:
        raise ValueError("cannot factor the empty composition")
    return Factorization(tuple(_merge_trivial(_raw_factors(beta, from_right))))


def admits_only_trivial(beta: Composition) -> bool:
    """True if every factorization beta = delta o eps is trivial."""
    beta = Composition(beta)
    n = beta.size
    for p in range(2, n):
        if n % p == 0:
            split = try_split(beta, p)
            if split is not None and not is_trivial_pair(*split):
                return False
    return True


def equivalence_class(beta: Composition) -> list[Composition]:
    """All compositions obtained by reversing some irreducible factors, sorted."""
    fac = irreducible_factorization(beta)
    choices = [(f,) if s else (f, reverse(f)) for f, s in zip(fac.factors, fac.symmetric_flags)]
    return sorted({circ_all(pick) for pick in product(*choices)})


def equivalent_by_multiset(beta: Composition, gamma: Composition) -> bool:
    if sum(beta) != sum(gamma):
        return False
    return multiset_key(beta) == multiset_key(gamma)


def equivalent_by_factorization(beta: Composition, gamma: Composition) -> bool:
    if sum(beta) != sum(gamma):
        return False
    return Composition(gamma) in equivalence_class(beta)


def equivalent(beta: Composition, gamma: Composition, method: str = "both") -> bool:
    """Decide beta ~ gamma.

    ``method`` is "multiset", "factorization" or "both"; with "both" the two
    answers are computed independently and a disagreement raises AssertionError.
    """
    if method == "multiset":
        return equivalent_by_multiset(beta, gamma)
    if method == "factorization":
        return equivalent_by_factorization(beta, gamma)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    a = equivalent_by_multiset(beta, gamma)
    b = equivalent_by_factorization(beta, gamma)
    if a != b:
        raise AssertionError(f"equivalence routes disagree on {beta}, {gamma}")
    return a


def class_key(beta: Composition) -> Composition:
    """Lexicographically smallest member of beta's equivalence class."""
    return equivalence_class(beta)[0]


def predicted_length(factors) -> int:
    """Length of circ_all(factors) from the factor sizes and lengths alone."""
    factors = list(factors)
    total = len(factors[0])
    scale = 1
    for prev, f in zip(factors, factors[1:]):
        scale *= sum(prev)
        total += scale * (len(f) - 1)
    return total
