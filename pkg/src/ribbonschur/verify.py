"""Exhaustive checks of the identities this library relies on.

Each suite returns a list of :class:`Check` records; a failing record carries a
counterexample payload.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .compops import (
    admits_only_trivial,
    equivalence_class,
    irreducible_factorization,
    is_trivial_pair,
)
from .compositions import (
    compositions,
    multiset_key,
    partitions,
    reverse,
)
from .cone import (
    Multicollection,
    cone_vector_dense,
    extreme_rays,
    facet_report,
    fully_balanced,
    is_extreme_ray,
)
from .perms import (
    Permutation,
    descent_pair_matrix,
    matrix_rows,
    star,
    tensor,
    verify_tensor_descents,
)
from .qsym import QsymExpr, is_symmetric
from .sym import (
    jacobi_trudi,
    ribbon_in_F,
    ribbon_in_h,
    ribbon_shape,
    schur_in_F,
    verify_plethysm_average,
)

SUITES = ("equivalence", "ribbon", "descents", "cone")
KNOWN_EXTRA_RAYS = {4: 1, 5: 2, 6: 23}


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    counterexample: object = None

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


def _partition_agreement(items, *keyfuncs):
    """Find a pair on which the equality relations induced by the key functions differ."""
    keys = [[f(x) for f in keyfuncs] for x in items]
    for i, a in enumerate(items):
        for j in range(i + 1, len(items)):
            eqs = {keys[i][k] == keys[j][k] for k in range(len(keyfuncs))}
            if len(eqs) > 1:
                return a, items[j]
    return None


def _class_key(beta):
    return tuple(equivalence_class(beta))


def check_equivalence(n_max: int) -> list[Check]:
    checks = []
    for n in range(1, n_max + 1):
        comps = compositions(n)
        bad = _partition_agreement(comps, multiset_key, _class_key, cone_vector_dense)
        checks.append(Check(f"equivalence routes agree, n={n}", bad is None,
                            {"pairs": len(comps) ** 2},
                            None if bad is None else [str(b) for b in bad]))

        bad = None
        sizes = {}
        for beta in comps:
            fac = irreducible_factorization(beta)
            left = irreducible_factorization(beta, from_right=False)
            cls = equivalence_class(beta)
            ok = (fac.compose() == beta
                  and fac.factors == left.factors
                  and all(admits_only_trivial(f) for f in fac.factors)
                  and not any(is_trivial_pair(a, b) for a, b in zip(fac.factors, fac.factors[1:]))
                  and len(cls) == 2 ** fac.r
                  and reverse(beta) in cls)
            if not ok:
                bad = str(beta)
                break
            sizes[cls[0]] = len(cls)
        if bad is None and sum(sizes.values()) != 2 ** (n - 1):
            bad = "class sizes do not sum to 2^(n-1)"
        checks.append(Check(f"factorization properties, n={n}", bad is None,
                            {"classes": len(sizes)}, bad))
    return checks


def check_ribbon(n_max: int) -> list[Check]:
    checks = []
    for n in range(1, min(n_max, 8) + 1):
        comps = compositions(n)
        bad = _partition_agreement(
            comps,
            lambda b: tuple(ribbon_in_h(b).terms.items()),
            lambda b: tuple(ribbon_in_F(b).terms.items()),
            _class_key,
        )
        checks.append(Check(f"ribbon equality routes agree, n={n}", bad is None, {},
                            None if bad is None else [str(b) for b in bad]))
        distinct = len({tuple(ribbon_in_h(b).terms.items()) for b in comps})
        classes = len({multiset_key(b) for b in comps})
        checks.append(Check(f"distinct ribbons = classes, n={n}", distinct == classes,
                            {"ribbons": distinct, "classes": classes}))
    for n in range(1, min(n_max, 7) + 1):
        bad = next((str(b) for b in compositions(n)
                    if jacobi_trudi(ribbon_shape(b)) != ribbon_in_h(b)), None)
        checks.append(Check(f"Jacobi-Trudi matches ribbon h-expansion, n={n}", bad is None, {}, bad))
    bad = None
    count = 0
    for size in range(1, 13):
        for beta in compositions(size):
            for m in range(1, 12 // size + 1):
                count += 1
                if not verify_plethysm_average(m, beta):
                    bad = {"m": m, "beta": str(beta)}
    checks.append(Check("plethysm average (reduced form), m|beta| <= 12", bad is None,
                        {"cases": count}, bad))
    return checks


def check_descents(n_max: int, seed: int = 0, samples: int = 1000) -> list[Check]:
    checks = []
    s3 = [Permutation(p) for p in product(range(1, 4), repeat=3) if len(set(p)) == 3]
    bad = next(([str(a), str(b)] for a in s3 for b in s3 if not verify_tensor_descents(a, b)), None)
    checks.append(Check("tensor descents, S3 x S3", bad is None, {"cases": 36}, bad))

    rng = random.Random(seed)
    bad = None
    for _ in range(samples):
        m, n = rng.randint(1, 6), rng.randint(1, 6)
        a = Permutation(rng.sample(range(1, m + 1), m))
        b = Permutation(rng.sample(range(1, n + 1), n))
        if not verify_tensor_descents(a, b) or star(tensor(a, b)) != tensor(star(a), star(b)):
            bad = [str(a), str(b)]
            break
    checks.append(Check("tensor descents and star, random pairs", bad is None, {"cases": samples}, bad))

    for n in range(1, min(n_max, 9) + 1):
        N = descent_pair_matrix(n)
        rows = matrix_rows(N, n)
        comps = compositions(n)
        bad = _partition_agreement(comps, lambda b: rows[b], multiset_key)
        checks.append(Check(f"descent-pair rows equal iff equivalent, n={n}", bad is None,
                            {"permutations": sum(N.values())},
                            None if bad is None else [str(b) for b in bad]))
        if n <= 7:
            bad = None
            for beta in comps:
                f = ribbon_in_F(beta)
                if any(N.get((alpha, beta), 0) != f[alpha] for alpha in comps):
                    bad = str(beta)
                    break
            checks.append(Check(f"descent-pair counts are ribbon F-coefficients, n={n}", bad is None, {}, bad))
    return checks


def random_multicollection(rng: random.Random, n: int, size: int | None = None) -> Multicollection:
    subsets = list(range(1 << n))
    size = rng.randint(0, min(len(subsets), 6)) if size is None else size
    weights = {}
    for mask in rng.sample(subsets, size):
        S = frozenset(x for x in range(1, n + 1) if mask >> (x - 1) & 1)
        weights[S] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Multicollection.from_mapping(n, weights)


def symmetric_multicollection(rng: random.Random, n: int) -> Multicollection:
    """Weights from a random rational combination of Schur functions of degree n + 1."""
    e = QsymExpr("F", n + 1)
    for lam in partitions(n + 1):
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        e = e + schur_in_F(lam).scale(c)
    return Multicollection.from_qsym(e)


def check_cone(n_max: int, seed: int = 0, samples: int = 200) -> list[Check]:
    checks = []
    rng = random.Random(seed)
    for n in range(1, min(n_max, 6) + 1):
        rays = extreme_rays(n)
        extra = [r for r in rays if not r.is_schur]
        schur_present = {r.schur[0][0] for r in rays if r.is_schur} == set(partitions(n))
        ok = schur_present and all(min(c for _, c in r.fundamental) >= 0 for r in rays)
        ok = ok and all(is_extreme_ray(n, r.vector()) for r in rays)
        expected = KNOWN_EXTRA_RAYS.get(n, 0 if n < 4 else None)
        if expected is not None:
            ok = ok and len(extra) == expected
        checks.append(Check(f"extreme rays, n={n}", ok,
                            {"rays": len(rays), "non_schur": len(extra), "expected_non_schur": expected},
                            None if ok else [str(r) for r in extra]))
        rep = facet_report(n)
        checks.append(Check(f"facet conjecture, n={n}", rep["redundant_count"] == 0 and rep["routes_agree"],
                            {"status": rep["status"], "classes": rep["inequality_classes"],
                             "redundant": rep["redundant_count"]},
                            None if rep["redundant_count"] == 0 else
                            [c["representative"] for c in rep["classes"] if c["redundant"]]))
    for m in range(1, min(n_max, 6) + 1):
        bad = None
        for i in range(samples):
            kind = i % 3
            if kind == 0:
                mc = random_multicollection(rng, m)
            else:
                mc = symmetric_multicollection(rng, m)
                if kind == 2 and mc.weights:
                    mc = perturb(rng, mc)
            if fully_balanced(mc) != is_symmetric(mc.to_qsym()):
                bad = mc.to_json()
                break
        checks.append(Check(f"fully balanced iff symmetric, subsets of [{m}]", bad is None,
                            {"samples": samples}, bad))
    return checks


def perturb(rng: random.Random, mc: Multicollection) -> Multicollection:
    """Shift the weight of one random subset by a nonzero rational."""
    weights = dict(mc.weights)
    mask = rng.randrange(1 << mc.n)
    S = frozenset(x for x in range(1, mc.n + 1) if mask >> (x - 1) & 1)
    weights[S] = weights.get(S, 0) + Fraction(rng.choice([-2, -1, 1, 2]), rng.randint(1, 3))
    return Multicollection.from_mapping(mc.n, weights)


def run_suite(name: str, n_max: int) -> list[Check]:
    if name == "all":
        return [c for s in SUITES for c in run_suite(s, n_max)]
    return {
        "equivalence": check_equivalence,
        "ribbon": check_ribbon,
        "descents": check_descents,
        "cone": check_cone,
    }[name](n_max)
