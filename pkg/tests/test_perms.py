import random
from itertools import permutations

import pytest
from hypothesis import given

from conftest import perms
from ribbonschur.compops import circ, equivalent
from ribbonschur.compositions import Composition, compositions, multiset_key, reverse
from ribbonschur.errors import ResourceLimitError
from ribbonschur.perms import (
    Permutation,
    default_workers,
    descent_composition,
    descent_pair_matrix,
    descents,
    matrix_rows,
    matrix_to_json,
    star,
    tensor,
    tensor_by_matrix,
    verify_tensor_descents,
)
from ribbonschur.sym import ribbon_in_F

C = Composition.parse


def test_tensor_example():
    assert str(tensor(Permutation.parse("213"), Permutation.parse("132"))) == "465132798"
    assert tensor_by_matrix((2, 1, 3), (1, 3, 2)) == Permutation.parse("465132798")


def test_permutation_basics():
    p = Permutation.parse("3142")
    assert p.inverse() == (2, 4, 1, 3)
    assert descents(p).elements == (1, 3)
    assert descent_composition(p) == C("121")
    assert Permutation.identity(3) == (1, 2, 3)
    assert str(Permutation(range(1, 12))) == "1,2,3,4,5,6,7,8,9,10,11"
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_s3_squared():
    s3 = list(permutations(range(1, 4)))
    for a in s3:
        for b in s3:
            assert verify_tensor_descents(a, b)


@given(perms(), perms())
def test_tensor_descents(a, b):
    assert tensor(a, b) == tensor_by_matrix(a, b)
    assert descent_composition(tensor(a, b)) == circ(descent_composition(a), descent_composition(b))


@given(perms(), perms())
def test_star(a, b):
    assert star(tensor(a, b)) == tensor(star(a), star(b))
    assert descent_composition(star(a)) == reverse(descent_composition(a))
    assert star(star(a)) == tuple(a)


def test_random_large_pairs():
    rng = random.Random(7)
    for _ in range(1000):
        m, n = rng.randint(2, 7), rng.randint(2, 7)
        a = Permutation(rng.sample(range(1, m + 1), m))
        b = Permutation(rng.sample(range(1, n + 1), n))
        assert verify_tensor_descents(a, b)


def brute_matrix(n):
    out = {}
    for p in permutations(range(1, n + 1)):
        p = Permutation(p)
        key = descent_composition(p), descent_composition(p.inverse())
        out[key] = out.get(key, 0) + 1
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_matrix_brute(n):
    assert descent_pair_matrix(n) == brute_matrix(n)


def test_matrix_parallel_matches_serial():
    assert descent_pair_matrix(6, workers=3) == descent_pair_matrix(6, workers=1)


def test_matrix_env_workers(monkeypatch):
    monkeypatch.setenv("RIBBONSCHUR_WORKERS", "2")
    assert default_workers() == 2
    monkeypatch.delenv("RIBBONSCHUR_WORKERS")
    assert default_workers() == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_rows_equal_iff_equivalent(n):
    rows = matrix_rows(descent_pair_matrix(n), n)
    cs = compositions(n)
    for b in cs:
        for g in cs:
            assert (rows[b] == rows[g]) == equivalent(b, g)


@pytest.mark.parametrize("n", range(1, 7))
def test_counts_are_ribbon_coefficients(n):
    N = descent_pair_matrix(n)
    for beta in compositions(n):
        f = ribbon_in_F(beta)
        for alpha in compositions(n):
            assert N.get((alpha, beta), 0) == f[alpha]


def test_matrix_symmetry_and_total():
    N = descent_pair_matrix(5)
    assert sum(N.values()) == 120
    assert all(N[b, a] == c for (a, b), c in N.items())
    keys = {multiset_key(b) for b in compositions(5)}
    assert len(set(matrix_rows(N, 5).values())) == len(keys)


def test_matrix_limits():
    with pytest.raises(ResourceLimitError):
        descent_pair_matrix(10)
    with pytest.raises(ValueError):
        descent_pair_matrix(0)


def test_matrix_json():
    data = matrix_to_json(descent_pair_matrix(3), 3)
    assert data["matrix"]["1,2"] == {"1,2": 1, "2,1": 1}
    assert list(data["matrix"]) == ["1,1,1", "1,2", "2,1", "3"]


def test_descent_set_example_and_identity():
    assert descents(Permutation.parse("465132798")).elements == (2, 3, 5, 8)
    assert circ(C("12"), C("21")) == C("21231")
    for m in range(1, 5):
        for n in range(1, 5):
            assert descent_composition(tensor(Permutation.identity(m), Permutation.identity(n))) == (m * n,)
