from fractions import Fraction
from math import comb

import pytest

from aperylike.series import PowerSeries, compose_sum


def test_geometric_reciprocal():
    s = PowerSeries([1, -16], 8).reciprocal()
    assert s.coeffs == [16**n for n in range(9)]


def test_reciprocal_round_trip():
    f = PowerSeries([3, 1, Fraction(1, 2), -7], 10)
    one = f * f.reciprocal()
    assert one == PowerSeries.constant(1, 10)


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroDivisionError):
        PowerSeries.x(4).reciprocal()


def test_negative_power_is_binomial_series():
    # (1-x)^(-3) = sum C(n+2, 2) x^n
    s = PowerSeries([1, -1], 12) ** -3
    assert s.coeffs == [comb(n + 2, 2) for n in range(13)]


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        PowerSeries([1], 3) + PowerSeries([1], 4)


def test_compose_sum_exp_like():
    # sum x^k composed with x/(1-x)... check against direct expansion of 1/(1 - y), y = x/(1-x): (1-x)/(1-2x)
    x = PowerSeries.x(10)
    inner = x / (1 - x)
    out = compose_sum([1] * 11, inner)
    expected = (1 - x) / (1 - 2 * x)
    assert out == expected


def test_compose_sum_requires_zero_constant():
    with pytest.raises(ValueError):
        compose_sum([1, 1], PowerSeries([1, 1], 3))


def test_valuation_and_indexing():
    s = PowerSeries([0, 0, 5], 6)
    assert s.valuation() == 2
    assert s[2] == 5
    assert PowerSeries([], 3).valuation() == 4
