from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from sympart.symfunc import PowerSumPoly, eval_poly, power_sums
from sympart.trec import (
    InterpolationError,
    T_values,
    compute_T_poly,
    eval_T_direct,
    eval_T_via_P,
    interpolate_powersum,
)
from sympart.partfunc import eval_f

from oracles import T_compositions_brute

F = Fraction
nonzero_q = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(bool)
pos_q = st.fractions(min_value=F(1, 9), max_value=30, max_denominator=9)

# printed expansions, numerators over a common denominator
PRINTED_T = {
    0: ({(): 1}, 1),
    1: ({(1,): 1}, 2),
    2: ({(1, 1): 3, (2,): 1}, 12),
    3: ({(1, 1, 1): 1, (1, 2): 1}, 8),
    4: ({(1, 1, 1, 1): 15, (1, 1, 2): 30, (2, 2): 5, (4,): -2}, 240),
}


@pytest.mark.parametrize("r, x, expected", [
    (1, (1, 1), 1),
    (0, (3, 5, 7), 1),
    (2, (1, 1), F(7, 6)),
])
def test_via_p_examples(r, x, expected):
    assert eval_T_via_P(r, x) == expected


@pytest.mark.parametrize("r, x, expected", [
    (3, (2,), 2),
    (1, (1, 1), 1),
    (0, (1, 2, 3), 1),
])
def test_direct_examples(r, x, expected):
    assert eval_T_direct(r, x) == expected


def test_via_p_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        eval_T_via_P(2, (0, 1))
    assert eval_T_direct(2, (0, 1)) == T_compositions_brute(2, (0, 1))


@given(st.integers(0, 6), st.lists(st.fractions(-10, 10, max_denominator=5), min_size=1,
                                   max_size=4))
@settings(max_examples=80, deadline=None)
def test_direct_matches_composition_brute(r, x):
    assert eval_T_direct(r, x) == T_compositions_brute(r, x)


@given(st.integers(0, 9), st.lists(nonzero_q, min_size=1, max_size=6))
@settings(max_examples=120, deadline=None)
def test_direct_agrees_with_via_p(r, x):
    assert eval_T_direct(r, x) == eval_T_via_P(r, x)


@given(st.lists(st.fractions(-10, 10, max_denominator=5), min_size=1, max_size=7))
@settings(max_examples=60, deadline=None)
def test_series_values_agree_with_direct(x):
    assert T_values(x, 8) == [eval_T_direct(r, x) for r in range(9)]


@given(st.integers(0, 9), st.lists(pos_q, min_size=1, max_size=6))
@settings(max_examples=100, deadline=None)
def test_positive(r, x):
    assert eval_T_direct(r, x) > 0


@pytest.mark.parametrize("r", sorted(PRINTED_T))
def test_printed_rows(r):
    nums, den = PRINTED_T[r]
    assert compute_T_poly(r) == PowerSumPoly({k: F(v, den) for k, v in nums.items()})


def test_spec_coefficients():
    assert compute_T_poly(3) == PowerSumPoly({(1, 1, 1): F(1, 8), (1, 2): F(1, 8)})
    assert compute_T_poly(4) == PowerSumPoly({
        (1, 1, 1, 1): F(1, 16), (1, 1, 2): F(1, 8), (2, 2): F(1, 48), (4,): F(-1, 120)})
    assert compute_T_poly(1) == PowerSumPoly({(1,): F(1, 2)})


@pytest.mark.parametrize("r", range(10))
def test_structure(r):
    p = compute_T_poly(r)
    assert p.is_homogeneous(r)
    for mono, _ in p.items():
        assert not any(k in (3, 5, 7, 9) for k in mono)
        if r % 2:
            assert 1 in mono


@pytest.mark.parametrize("r", [2, 5, 8])
def test_seed_independent(r):
    assert interpolate_powersum(lambda x: eval_T_direct(r, x), r, seed=1) == \
        interpolate_powersum(lambda x: eval_T_direct(r, x), r, seed=987654)


@pytest.mark.parametrize("r", range(8))
def test_poly_valid_for_any_m(r):
    rng = random.Random(r)
    p = compute_T_poly(r)
    for m in range(1, 9):
        x = [F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)]
        assert eval_poly(p, power_sums(x, max(r, 1))) == eval_T_direct(r, x)


def test_interpolate_f_weight3():
    p = interpolate_powersum(lambda d: eval_f(3, d), 3, seed=5)
    assert p == PowerSumPoly({(1, 1, 1): F(1, 8), (1, 2): F(-1, 8)})


def test_interpolate_weight0():
    assert interpolate_powersum(lambda x: 1, 0) == PowerSumPoly.constant(1)


def test_interpolation_detects_non_power_sum_function():
    # x_1 alone is not symmetric, so no weight-1 fit survives the held-out points
    with pytest.raises(InterpolationError) as info:
        interpolate_powersum(lambda x: F(x[0]), 2, seed=3)
    assert info.value.witness is not None
