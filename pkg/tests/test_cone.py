import random
from fractions import Fraction

import pytest

from ribbonschur.compositions import Composition, Partition, compositions, multiset_key, partitions
from ribbonschur.compops import equivalent
from ribbonschur.cone import (
    Multicollection,
    Ray,
    balanced_check,
    class_representatives,
    cone_vector,
    cone_vector_dense,
    covering_sum,
    extreme_rays,
    extreme_rays_by_intersection,
    f_lambda,
    facet_report,
    fully_balanced,
    inequalities,
    is_extreme_ray,
    is_extreme_vector,
    is_redundant_inequality,
    kappa_values,
    profile,
    ray_matrix,
)
from ribbonschur.errors import ResourceLimitError
from ribbonschur.qsym import QsymExpr, is_symmetric
from ribbonschur.sym import schur_in_F
from ribbonschur.verify import perturb, random_multicollection, symmetric_multicollection

C = Composition.parse
P = Partition.parse


def schur_combo(n, terms):
    d = {P(k): c for k, c in terms.items()}
    return tuple(d.get(lam, 0) for lam in partitions(n))


def rays_as_vectors(n):
    return {r.vector() for r in extreme_rays(n)}


def test_ray_matrix_entries():
    rm = ray_matrix(4)
    assert rm.entry((2, 2), (1, 2, 1)) == 1
    assert rm.entry((2, 2), (2, 2)) == 1
    assert rm.entry((2, 2), (3, 1)) == 0
    assert rm.column((4,)) == (1, 0, 0, 0, 0)
    with pytest.raises(ResourceLimitError):
        ray_matrix(9)


def test_cone_vector_is_multiset():
    assert cone_vector(C("211")) == {P("4"): 1, P("31"): 1, P("22"): 1, P("211"): 1}
    assert cone_vector(C("121")) == {P("4"): 1, P("31"): 2, P("211"): 1}


@pytest.mark.parametrize("n", range(1, 10))
def test_cone_vector_invariance(n):
    cs = compositions(n)
    keys = {b: cone_vector_dense(b) for b in cs}
    for b in cs:
        for g in cs:
            assert (keys[b] == keys[g]) == equivalent(b, g)


def test_inequality_dedup():
    for n in range(1, 8):
        reps = class_representatives(n)
        assert len(reps) == len({multiset_key(b) for b in compositions(n)})
        assert reps == sorted(reps)
        assert len(inequalities(n)) == len(reps)


def test_n4_extra_ray():
    rays = extreme_rays(4)
    assert len(rays) == 6
    extra = [r for r in rays if not r.is_schur]
    assert len(extra) == 1
    assert extra[0].vector() == schur_combo(4, {"31": 1, "22": -1, "211": 1})
    assert dict(extra[0].fundamental) == {C("31"): 1, C("13"): 1, C("211"): 1, C("112"): 1}
    assert str(extra[0]) == "s_31 - s_22 + s_211"


def test_n5_extra_rays():
    extra = {r.vector() for r in extreme_rays(5) if not r.is_schur}
    assert extra == {schur_combo(5, {"311": 1, "2111": 1, "221": -1}),
                     schur_combo(5, {"41": 1, "311": 1, "32": -1})}


def test_n6_count():
    rays = extreme_rays(6)
    assert sum(not r.is_schur for r in rays) == 23
    assert len(rays) == 23 + 11


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_rays_and_positivity(n):
    rays = extreme_rays(n)
    schur = {r.schur[0][0] for r in rays if r.is_schur}
    assert schur == set(partitions(n))
    for r in rays:
        assert all(c > 0 for _, c in r.fundamental)
        assert is_extreme_ray(n, r.vector())
    vectors = [r.vector() for r in rays]
    assert vectors == sorted(vectors, reverse=True)


@pytest.mark.parametrize("n", range(1, 6))
def test_two_methods_agree(n):
    assert [r.vector() for r in extreme_rays(n)] == [r.vector() for r in extreme_rays_by_intersection(n)]


def test_non_extreme_points():
    # a sum of two Schur rays is in the cone but not extreme
    assert not is_extreme_ray(4, schur_combo(4, {"31": 1, "22": 1}))
    # s_31 - s_22 alone has a negative F coefficient
    assert not is_extreme_ray(4, schur_combo(4, {"31": 1, "22": -1}))


def test_ray_limits():
    with pytest.raises(ResourceLimitError):
        extreme_rays(8)
    with pytest.raises(ResourceLimitError):
        extreme_rays_by_intersection(6)
    with pytest.raises(ResourceLimitError):
        is_extreme_vector(C("111111111"))


def test_ray_json():
    r = Ray.from_vector(4, schur_combo(4, {"31": 2, "22": -2, "211": 2}))
    assert r.vector() == schur_combo(4, {"31": 1, "22": -1, "211": 1})
    assert r.to_json() == {"schur": {"3,1": "1", "2,2": "-1", "2,1,1": "1"},
                           "fundamental": {"1,1,2": "1", "1,3": "1", "2,1,1": "1", "3,1": "1"}}


@pytest.mark.parametrize("n", range(1, 7))
def test_facet_report(n):
    rep = facet_report(n)
    assert rep["redundant_count"] == 0
    assert rep["non_extreme_vector_count"] == 0
    assert rep["routes_agree"]
    assert rep["status"] == "verified at this scale"
    assert rep["dimension"] == len(list(partitions(n)))


def test_single_class_queries():
    assert not is_redundant_inequality(C("1111"))
    assert is_extreme_vector(C("4"))


def test_profile_examples():
    assert profile({2, 3, 5, 7, 8, 9}, 11) == (3, 2, 1, 0, 0, 0)
    assert frozenset({2, 3, 5, 7, 8, 9}) in f_lambda((4, 3, 2, 1, 1, 1), 11)
    assert f_lambda((1, 1, 1, 1)) == [frozenset()]
    assert f_lambda((2, 1, 1)) == [frozenset({1}), frozenset({2}), frozenset({3})]
    assert f_lambda((2, 2, 1), 4) == [frozenset({1, 3}), frozenset({1, 4}), frozenset({2, 4})]
    assert f_lambda((3, 1, 1), 4) == [frozenset({1, 2}), frozenset({2, 3}), frozenset({3, 4})]
    with pytest.raises(ValueError):
        f_lambda((3, 1), 4)


@pytest.mark.parametrize("n", range(0, 8))
def test_f_lambda_partitions_subsets(n):
    seen = []
    for lam in partitions(n + 1):
        seen.extend(f_lambda(lam, n))
    assert len(seen) == len(set(seen)) == 2 ** n


def test_kappa_s321():
    mc = Multicollection.from_qsym(schur_in_F((3, 2, 1)))
    k = kappa_values(mc)
    assert [k[P(x)] for x in ("21111", "3111", "2211", "321", "222")] == [8, 2, 4, 1, 2]
    assert fully_balanced(mc)


def test_covering_sum_by_hand():
    mc = Multicollection.from_mapping(3, {(1,): 1, (1, 2): 2, (): 5})
    assert covering_sum(mc, frozenset({1})) == 3
    assert covering_sum(mc, frozenset()) == 8
    assert balanced_check(mc, (2, 1, 1)) is None


def test_multicollection_json():
    data = {"n": 5, "weights": {"1,3": "1", "2,4": "2", "": "-1/2"}}
    mc = Multicollection.from_json(data)
    assert mc.to_json() == {"n": 5, "weights": {"": "-1/2", "1,3": "1", "2,4": "2"}}
    assert mc.to_qsym() == QsymExpr("F", 6, {C("6"): Fraction(-1, 2), C("123"): 1, C("222"): 2})
    assert Multicollection.from_qsym(mc.to_qsym()) == mc
    with pytest.raises(ValueError):
        Multicollection.from_mapping(3, {(4,): 1})


@pytest.mark.parametrize("m", range(1, 7))
def test_balanced_iff_symmetric(m):
    rng = random.Random(m)
    for i in range(200):
        if i % 3 == 0:
            mc = random_multicollection(rng, m)
        else:
            mc = symmetric_multicollection(rng, m)
            if i % 3 == 2:
                mc = perturb(rng, mc)
        assert fully_balanced(mc) == is_symmetric(mc.to_qsym())
