import pytest

from ribbonschur.verify import (
    SUITES,
    Check,
    _partition_agreement,
    check_cone,
    check_descents,
    check_equivalence,
    check_ribbon,
    run_suite,
)


def test_partition_agreement_finds_disagreement():
    items = [1, 2, 3, 4]
    assert _partition_agreement(items, lambda x: x % 2, lambda x: x % 2 == 0) is None
    assert _partition_agreement(items, lambda x: x % 2, lambda x: x < 3) == (1, 2)


def test_check_json():
    assert Check("a", True, {"k": 1}).to_json() == {"name": "a", "passed": True, "detail": {"k": 1}}
    assert Check("b", False, {}, [1]).to_json()["counterexample"] == [1]


@pytest.mark.parametrize("suite,fn,n", [
    ("equivalence", check_equivalence, 7),
    ("ribbon", check_ribbon, 5),
    ("descents", check_descents, 6),
    ("cone", check_cone, 4),
])
def test_suites_pass(suite, fn, n):
    checks = fn(n)
    assert checks and all(c.passed for c in checks), [c.to_json() for c in checks if not c.passed]


def test_run_suite_all():
    checks = run_suite("all", 3)
    assert {c.name for c in checks} >= {"tensor descents, S3 x S3", "fully balanced iff symmetric, subsets of [1]"}
    assert all(c.passed for c in checks)
    assert SUITES == ("equivalence", "ribbon", "descents", "cone")
    with pytest.raises(KeyError):
        run_suite("unknown", 3)
