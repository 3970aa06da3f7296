"""Exact integer and rational primitives.

Integers are Python ints and rationals are :class:`fractions.Fraction`, which
is always stored in lowest terms with a positive denominator.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

__all__ = ["Rational", "binomial", "factorial", "int_pow", "FactorialTable"]

Rational = Fraction

DEFAULT_FACTORIAL_CAP = 4 * 200


class FactorialTable:
    """Append-only table of n! for 0 <= n <= cap.

    Fills are guarded by a lock; entries never change once written, so reads
    of an already-filled index need no locking.
    """

    def __init__(self, cap: int = DEFAULT_FACTORIAL_CAP):
        self.cap = cap
        self._values = [1]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"factorial of negative number {n}")
        if n > self.cap:
            return math.factorial(n)
        if n >= len(self._values):
            with self._lock:
                values = self._values
                acc = values[-1]
                for i in range(len(values), n + 1):
                    acc *= i
                    values.append(acc)
        return self._values[n]


_FACTORIALS = FactorialTable()


def factorial(n: int) -> int:
    """Return n! for n >= 0."""
    return _FACTORIALS.get(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for arbitrary integers.

    Zero when k < 0, or when 0 <= n < k.  For negative n the generalized
    value n(n-1)...(n-k+1)/k! is returned, i.e. (-1)^k C(k-n-1, k).
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    value = math.comb(k - n - 1, k)
    return -value if k & 1 else value


def int_pow(base: int, exp: int) -> int:
    if exp < 0:
        raise ValueError("negative exponent")
    return base**exp
