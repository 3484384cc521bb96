from fractions import Fraction

import pytest

from sympart.exact import DomainError, binomial
from sympart.identities import (
    CnrTable,
    cnr_closed,
    cnr_recursive,
    cnr_term_count,
    cnr_terms,
    eliminate_odd_ratios,
    relation26_holds,
    verify_eq28_equivalence,
    verify_relation26,
)


@pytest.mark.parametrize("n, r, expected", [
    (4, 1, 7), (2, 2, 2), (3, 3, 16), (4, 4, 272), (3, 2, 20), (3, 1, 5), (4, 2, 70),
])
def test_values(n, r, expected):
    assert cnr_recursive(n, r) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_recursive_matches_closed(n):
    for r in range(1, min(n, 4) + 1):
        assert cnr_recursive(n, r) == cnr_closed(n, r)


def test_closed_rows_by_hand():
    assert cnr_closed(3, 2) == binomial(5, 2) * binomial(3, 1) - binomial(5, 3) == 20
    assert cnr_closed(4, 2) == 105 - 35


def test_positive_integers():
    for n in range(1, 13):
        for r in range(1, n + 1):
            assert cnr_recursive(n, r) > 0


@pytest.mark.parametrize("r", range(1, 9))
def test_term_count(r):
    assert cnr_term_count(8, r) == 2 ** (r - 1)
    assert len(cnr_terms(max(r, 3), r)) == 2 ** (r - 1)


def test_term_shape():
    # every chain: even binomial steps then one odd step
    for sign, factors in cnr_terms(6, 4):
        *evens, last = factors
        assert all(b % 2 == 0 for _, b in evens) and last[1] % 2 == 1
        assert sign == (-1) ** len(evens)


def test_errors():
    with pytest.raises(DomainError):
        cnr_recursive(2, 3)
    with pytest.raises(DomainError):
        cnr_closed(6, 5)


def test_tangent_numbers_on_diagonal():
    assert [cnr_recursive(n, n) for n in range(1, 8)] == [1, 2, 16, 272, 7936, 353792, 22368256]


@pytest.mark.parametrize("n, coeffs", [(2, (3, -2)), (3, (5, -20, 16)), (4, (7, -70, 336, -272))])
def test_eq16_coefficients(n, coeffs):
    assert eliminate_odd_ratios(n) == coeffs
    rep = verify_eq28_equivalence(n)
    assert rep.passed and tuple(rep.params["coefficients"]) == coeffs


@pytest.mark.parametrize("n", range(1, 10))
def test_eq28_equivalence(n):
    assert verify_eq28_equivalence(n).passed


def test_table_rows():
    table = CnrTable.build(4)
    assert table.rows()[-1] == {"n": 4, "r": 4, "value": "272", "terms": 8}
    assert all(table.term_counts[r] == 2 ** (r - 1) for r in table.term_counts)


@pytest.mark.parametrize("family, n, m", [("f", 1, 2), ("f", 2, 4), ("T", 2, 4), ("T", 3, 6)])
def test_relation26(family, n, m):
    rep = verify_relation26(family, n, m, seed=3, trials=20)
    assert rep.passed and rep.total == 20


def test_relation26_identically_true_for_n1():
    lhs, rhs = relation26_holds([Fraction(1), Fraction(7, 3)], 1)
    assert lhs == rhs == 1


def test_relation26_outside_range_flagged():
    rep = verify_relation26("f", 3, 2, trials=5)
    assert rep.params["outside_stated_range"] is True
    assert rep.passed


def test_relation26_unknown_family():
    with pytest.raises(DomainError):
        verify_relation26("g", 1, 2)


def test_relation26_reports_witness_on_bad_sequence():
    lhs, rhs = relation26_holds([Fraction(1), Fraction(1), Fraction(2), Fraction(9)], 2)
    assert lhs != rhs
