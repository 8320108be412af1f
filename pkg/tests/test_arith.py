from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grothtab.arith import (
    binomial,
    format_rational,
    parse_rational,
    pochhammer,
    rational_pair,
)

small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_pochhammer_empty_product_is_one():
    for a in (0, 1, -7, Fraction(3, 2), Fraction(-22, 7)):
        assert pochhammer(a, 0) == 1


def test_pochhammer_examples():
    assert pochhammer(-2, 3) == 0
    assert pochhammer(Fraction(3, 2), 2) == Fraction(15, 4)
    assert pochhammer(1, 4) == 24


def test_pochhammer_rejects_negative_m():
    with pytest.raises(ValueError):
        pochhammer(1, -1)


@given(small_rationals, st.integers(min_value=0, max_value=8))
def test_pochhammer_recurrence(a, m):
    assert pochhammer(a, m + 1) == pochhammer(a, m) * (a + m)


def test_pochhammer_vanishing_drives_termination():
    # (-j)_m == 0 exactly when m > j
    for j in range(7):
        for m in range(10):
            assert (pochhammer(-j, m) == 0) == (m > j)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    assert binomial(3, 5) == 0
    assert binomial(6, 3) == 20
    assert binomial(5, -1) == 0
    assert binomial(0, 0) == 1


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=-3, max_value=43))
def test_binomial_pascal_recurrence(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(small_rationals)
def test_rational_string_round_trip(value):
    assert parse_rational(format_rational(value)) == value


def test_parse_rational_accepts_plain_and_fraction_forms():
    assert parse_rational("3") == 3
    assert parse_rational("-3/5") == Fraction(-3, 5)
    assert parse_rational(" 7/2 ") == Fraction(7, 2)


def test_parse_rational_rejects_junk():
    for bad in ("", "x", "1/0", "2/"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_rational_pair_is_reduced_with_positive_denominator():
    assert rational_pair(Fraction(-4, 6)) == (-2, 3)
    assert rational_pair(5) == (5, 1)
