"""Exact-arithmetic helpers."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delpezzo.errors import NonIntegralResult
from delpezzo.numerics import ExactRatio, binomial, to_integer


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (4, 2, 6),
        (7, 5, 21),
        (0, 0, 1),
        (5, 0, 1),
        (5, 5, 1),
        (5, 6, 0),
        (5, -1, 0),
        (-1, 0, 0),
        (-3, 2, 0),
    ],
)
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(min_value=0, max_value=40))
def test_binomial_row_sums(n):
    assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=0, max_value=30))
def test_binomial_pascal(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_to_integer_accepts_integral():
    assert to_integer(Fraction(6, 2)) == 3
    assert to_integer(7) == 7
    assert to_integer(Fraction(0)) == 0


def test_to_integer_rejects_proper_fraction():
    with pytest.raises(NonIntegralResult):
        to_integer(Fraction(3, 2))
    with pytest.raises(NonIntegralResult, match="conic"):
        to_integer(Fraction(3, 2), context="conic")


def test_exact_ratio_is_fraction():
    # The alias pins the exact-arithmetic substrate: no floats anywhere.
    assert ExactRatio is Fraction
    third = ExactRatio(1, 3)
    assert third * 3 == 1
