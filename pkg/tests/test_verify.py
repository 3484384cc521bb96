from fractions import Fraction
import random

import pytest

from sympart.exact import DomainError
from sympart.pcore import eval_P
from sympart.symfunc import power_sums
from sympart.verify import (
    BOUNDS,
    _relations,
    check_eq2,
    check_eq12,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    verify_bounds,
    verify_conjecture1,
    verify_conjecture2,
    verify_lemmas,
    verify_parity_suite,
    verify_power_sum_relations,
)

F = Fraction


def test_conjecture1_small():
    rep = verify_conjecture1(5)
    assert rep.passed and rep.total == 4
    assert rep.params["outcomes"] == {str(r): "pass" for r in range(2, 6)}


def test_conjecture1_range():
    with pytest.raises(DomainError):
        verify_conjecture1(1)


@pytest.mark.parametrize("m, ns", [(2, 1), (4, 2), (6, 3)])
def test_conjecture2(m, ns):
    rep = verify_conjecture2(m, trials=10)
    assert rep.passed and rep.total == 10 * ns


@pytest.mark.parametrize("r", range(2, 8))
def test_bounds_coincide_at_m1(r):
    lo, hi = BOUNDS(r, 1)
    assert lo == hi == F(2**r, r + 1)


def test_bounds_lower_edge_at_equal_coordinates():
    lo, hi = BOUNDS(2, 2)
    assert (lo, hi) == (F(7, 6), F(4, 3))
    rep = verify_bounds(2, 2, trials=1)
    assert rep.passed


def test_bounds_small_run():
    assert verify_bounds(7, 3, trials=30).passed
    assert verify_bounds(7, 1, trials=10).passed


def test_bounds_range():
    with pytest.raises(DomainError):
        verify_bounds(8, 2)


def test_relations_spec_examples():
    E = power_sums((1, 2), 6)
    assert _relations(2, E)[0][1] == 9
    assert _relations(1, power_sums((5,), 6))[2][1] == 625
    assert _relations(3, power_sums((1, 1, 1), 6))[0][1] == 3


@pytest.mark.parametrize("m", [1, 2])
def test_relations_pass_m1_m2(m):
    assert verify_power_sum_relations(m, trials=50).passed


def test_relations_m3_printed_e6_is_off_by_e2_cubed_over_12():
    # E4 and E5 hold; the printed E6 carries 2*E2^3 where Newton's identities give 3*E2^3
    rng = random.Random(0)
    for _ in range(50):
        x = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)]
        E = power_sums(x, 6)
        (_, e4, t4), (_, e5, t5), (_, e6, t6) = _relations(3, E)
        assert e4 == t4 and e5 == t5
        assert t6 - e6 == E[1] ** 3 / 12
    rep = verify_power_sum_relations(3, trials=20)
    assert {f["inputs"]["relation"] for f in rep.failures} <= {"E6"}


def test_relations_range():
    with pytest.raises(DomainError):
        verify_power_sum_relations(4)


@pytest.mark.parametrize("check", [check_lemma1, check_lemma2, check_lemma3, check_eq12])
def test_lemma_checks(check):
    rep = check(10, 6, seed=7, trials=40)
    assert rep.passed and rep.total == 40


def test_eq2_check():
    assert check_eq2(6, seed=7, trials=20).passed


def test_lemma_spec_examples():
    assert eval_P(5, (1, 2, 0)) == 0
    assert eval_P(5, (3, -3)) == 0
    assert eval_P(6, (1, 1, 2)) > 0


def test_lemmas_aggregate_and_deterministic():
    a = verify_lemmas(8, 4, seed=5, trials=20)
    b = verify_lemmas(8, 4, seed=5, trials=20)
    assert a.passed and a.to_json() == b.to_json()
    assert set(a.params["parts"]) == {"lemma1", "lemma2", "lemma3", "eq2", "eq12"}


def test_parity_suite():
    rep = verify_parity_suite(tuples=5, s_count=5, seed=1)
    assert rep.passed and rep.total == 25


def test_failure_carries_witness():
    from sympart.report import VerificationReport

    rep = VerificationReport("demo")
    rep.check_equal({"x": [F(1, 2)]}, F(1), F(2))
    d = rep.to_dict()
    assert d["status"] == "fail"
    assert d["failures"] == [{"inputs": {"x": ["1/2"]}, "expected": "1", "actual": "2"}]
    assert list(d) == ["claim", "params", "total", "failures", "status"]
