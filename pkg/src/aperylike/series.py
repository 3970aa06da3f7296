"""Dense truncated power series over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class PowerSeries:
    """c_0 + c_1 x + ... + c_N x^N, exact modulo x^(N+1)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        cs = [Fraction(c) for c in coeffs][: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: list[Fraction] = cs
        self.order = order

    @classmethod
    def constant(cls, c, order: int) -> "PowerSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def _check(self, other: "PowerSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.constant(other, self.order)
        self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            c = Fraction(other)
            return PowerSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(out, n)

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        """1/f via b_0 = 1/a_0, b_n = -(sum_{i=1..n} a_i b_{n-i}) / a_0."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("power series with zero constant term has no reciprocal")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, self.order + 1):
            s = sum(a[i] * b[n - i] for i in range(1, n + 1) if a[i])
            b.append(-s * inv0)
        return PowerSeries(b, self.order)

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * other.reciprocal()
        return self * (1 / Fraction(other))

    def __pow__(self, exp: int) -> "PowerSeries":
        if exp < 0:
            return self.reciprocal() ** (-exp)
        result = PowerSeries.constant(1, self.order)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order + 1 for the zero series)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order + 1

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __repr__(self):
        terms = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"PowerSeries([{terms}{more}], order={self.order})"


def compose_sum(coeffs: Sequence, inner: PowerSeries) -> PowerSeries:
    """sum_k coeffs[k] * inner^k, truncated; inner must have zero constant term."""
    if inner.coeffs[0] != 0:
        raise ValueError("inner series must vanish at 0")
    n = inner.order
    # Horner: only k <= n contribute since inner^k = O(x^k).
    top = min(len(coeffs) - 1, n)
    acc = PowerSeries.constant(coeffs[top], n)
    for k in range(top - 1, -1, -1):
        acc = acc * inner + coeffs[k]
    return acc
