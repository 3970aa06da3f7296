import math
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from aperylike.exactmath import FactorialTable, binomial, factorial, int_pow


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 9, 0), (-3, 2, 6), (5, -1, 0), (0, 0, 1), (-1, 3, -1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_negative_upper_matches_falling_factorial():
    for n in range(-12, 0):
        for k in range(0, 10):
            falling = math.prod(n - i for i in range(k))
            assert Fraction(falling, math.factorial(k)) == binomial(n, k)


@pytest.mark.parametrize("n,expected", [(0, 1), (5, 120), (10, 3628800)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_beyond_cap_and_negative():
    table = FactorialTable(cap=5)
    assert table.get(8) == 40320
    with pytest.raises(ValueError):
        factorial(-1)


def test_factorial_table_concurrent_fill():
    table = FactorialTable(cap=500)
    out = {}

    def fill(i):
        out[i] = table.get(100 + 3 * i)

    threads = [threading.Thread(target=fill, args=(i,)) for i in range(16)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(out[i] == math.factorial(100 + 3 * i) for i in range(16))
    assert all(table.get(n) == math.factorial(n) for n in range(150))


@pytest.mark.parametrize("base,exp,expected", [(-3, 4, 81), (16, 0, 1), (4, 3, 64)])
def test_int_pow(base, exp, expected):
    assert int_pow(base, exp) == expected


def test_int_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        int_pow(2, -1)


def test_pascal_rule():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_hockey_stick():
    for m in range(41):
        for r in range(m + 1):
            assert sum(binomial(n, r) for n in range(r, m + 1)) == binomial(m + 1, r + 1)


@pytest.mark.parametrize("b", [Fraction(1, 2), Fraction(1, 3), Fraction(5, 7)])
def test_gould_alternating_sum(b):
    for n in range(13):
        lhs = sum(Fraction(binomial(2 * k, k) * (-1) ** k * binomial(n + k, 2 * k)) / (k + b) for k in range(n + 1))
        num = math.prod((b - i for i in range(1, n + 1)), start=Fraction(1))
        den = math.prod((b + i for i in range(n + 1)), start=Fraction(1))
        assert lhs == (-1) ** n * num / den


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(1, 50))
def test_rational_reduction_is_canonical(a, b, scale):
    assert Fraction(a * scale, b * scale) == Fraction(a, b)
    f = Fraction(a * scale, b * scale)
    assert math.gcd(f.numerator, f.denominator) == 1 and f.denominator > 0


def test_big_integer_round_trips_through_text():
    big = binomial(6000, 3000)
    assert big.bit_length() > 5000
    assert int(str(big)) == big
