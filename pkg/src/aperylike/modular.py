"""Arithmetic in Z/p^k and the special quantities the congruences are built from.

Residues carry their modulus; mixing moduli raises :class:`ModulusMismatch`
instead of coercing, since a congruence checked at the wrong modulus is the
easiest way for this kind of harness to lie.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import kernels

__all__ = [
    "DenominatorDivisibleByP",
    "NotInvertible",
    "ModulusMismatch",
    "PrimePower",
    "Residue",
    "is_prime",
    "primes_between",
    "residue_of_rational",
    "mod_inverse",
    "mod_pow",
    "jacobi_symbol",
    "legendre_symbol",
    "fermat_quotient",
    "harmonic_residue",
    "harmonic_residues",
    "bernoulli_residue",
    "bernoulli_residues",
    "euler_residue",
    "euler_residues",
    "cubic_char_sum",
]

MAX_EXPONENT = 8


class DenominatorDivisibleByP(ArithmeticError):
    """A rational's denominator is divisible by p, so it has no residue mod p^k."""


class NotInvertible(ArithmeticError):
    pass


class ModulusMismatch(ValueError):
    pass


def is_prime(n: int) -> bool:
    """Deterministic trial division; meant for desk-scale n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for f in range(3, math.isqrt(n) + 1, 2):
        if n % f == 0:
            return False
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, ascending."""
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for f in range(2, math.isqrt(hi) + 1):
        if sieve[f]:
            sieve[f * f :: f] = bytes(len(range(f * f, hi + 1, f)))
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int = 1

    def __post_init__(self):
        if not 1 <= self.k <= MAX_EXPONENT:
            raise ValueError(f"exponent {self.k} outside 1..{MAX_EXPONENT}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def __str__(self) -> str:
        return f"{self.p}^{self.k}"

    @classmethod
    def parse(cls, text: str) -> "PrimePower":
        p, _, k = text.partition("^")
        return cls(int(p), int(k or 1))

    def __call__(self, value) -> "Residue":
        """Reduce an int or Fraction into this ring."""
        if isinstance(value, Fraction):
            return residue_of_rational(value, self)
        return Residue(value % self.modulus, self)


@dataclass(frozen=True)
class Residue:
    value: int
    pp: PrimePower

    def __post_init__(self):
        if not 0 <= self.value < self.pp.modulus:
            raise ValueError(f"{self.value} is not reduced modulo {self.pp}")

    @property
    def modulus(self) -> int:
        return self.pp.modulus

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.pp != self.pp:
                raise ModulusMismatch(f"cannot combine residues mod {self.pp} and mod {other.pp}")
            return other.value
        if isinstance(other, Fraction):
            return residue_of_rational(other, self.pp).value
        if isinstance(other, int):
            return other
        return NotImplemented

    def _make(self, value: int) -> "Residue":
        return Residue(value % self.pp.modulus, self.pp)

    def __add__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._make(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._make(self.value - v)

    def __rsub__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._make(v - self.value)

    def __mul__(self, other):
        v = self._coerce(other)
        return NotImplemented if v is NotImplemented else self._make(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return self * mod_inverse(self._make(v))

    def __pow__(self, exp: int):
        if exp < 0:
            return mod_pow(mod_inverse(self), -exp)
        return mod_pow(self, exp)

    def __eq__(self, other):
        if isinstance(other, Residue):
            if other.pp != self.pp:
                raise ModulusMismatch(f"cannot compare residues mod {self.pp} and mod {other.pp}")
            return self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.pp.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.pp))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value} mod {self.pp})"


def residue_of_rational(q, pp: PrimePower) -> Residue:
    """Image of a p-integral rational in Z/p^k."""
    q = Fraction(q)
    if q.denominator % pp.p == 0:
        raise DenominatorDivisibleByP(f"denominator of {q} is divisible by {pp.p}")
    m = pp.modulus
    return Residue(q.numerator * pow(q.denominator, -1, m) % m, pp)


def mod_inverse(r: Residue) -> Residue:
    if r.value % r.pp.p == 0:
        raise NotInvertible(f"{r.value} is not a unit modulo {r.pp}")
    return Residue(pow(r.value, -1, r.pp.modulus), r.pp)


def mod_pow(base: Residue, exp: int) -> Residue:
    """Square-and-multiply power; exp must be nonnegative."""
    if exp < 0:
        raise ValueError("negative exponent; invert first")
    m = base.pp.modulus
    result, b = 1 % m, base.value
    while exp:
        if exp & 1:
            result = result * b % m
        b = b * b % m
        exp >>= 1
    return Residue(result, base.pp)


def jacobi_symbol(a: int, n: int) -> int:
    if n <= 0 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs an odd positive modulus")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_symbol(a: int, p: int) -> int:
    return jacobi_symbol(a, p)


def fermat_quotient(a, pp: PrimePower) -> Residue:
    """q_p(a) = (a^(p-1) - 1)/p reduced mod p^k, for a p-adic unit a."""
    a = Fraction(a)
    p = pp.p
    if a.numerator % p == 0 or a.denominator % p == 0:
        raise NotInvertible(f"{a} is not a unit at {p}")
    big = p ** (pp.k + 1)
    power = a.numerator % big * pow(a.denominator, -1, big) % big
    power = pow(power, p - 1, big)
    diff = (power - 1) % big
    assert diff % p == 0
    return Residue(diff // p % pp.modulus, pp)


def harmonic_residues(n: int, r: int, pp: PrimePower) -> list[int]:
    """[H_0^(r), ..., H_n^(r)] mod p^k as plain ints; needs n < p."""
    if n >= pp.p:
        raise ValueError("harmonic sums need n < p so every 1/j^r is invertible")
    m = pp.modulus
    out = [0]
    acc = 0
    for j in range(1, n + 1):
        acc = (acc + pow(pow(j, r, m), -1, m)) % m
        out.append(acc)
    return out


def harmonic_residue(n: int, r: int, pp: PrimePower) -> Residue:
    return Residue(harmonic_residues(n, r, pp)[n], pp)


def _binomial_rows_mod(p: int, top: int):
    # rows 0..top; top < p keeps every factorial a unit
    fact = [1] * (top + 1)
    for i in range(1, top + 1):
        fact[i] = fact[i - 1] * i % p
    inv = [pow(f, -1, p) for f in fact]

    def comb(n, k):
        return fact[n] * inv[k] % p * inv[n - k] % p

    return comb


@lru_cache(maxsize=64)
def bernoulli_residues(n_max: int, p: int) -> tuple[int, ...]:
    """B_0..B_{n_max} mod p from B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k.

    Needs p > n_max + 1 so each m+1 is a unit.
    """
    if p <= n_max + 1:
        raise ValueError(f"p={p} too small for B_{n_max} by recurrence")
    comb = _binomial_rows_mod(p, n_max + 1)
    values = [1]
    for m in range(1, n_max + 1):
        s = sum(comb(m + 1, k) * values[k] for k in range(m)) % p
        values.append(-s * pow(m + 1, -1, p) % p)
    return tuple(values)


def bernoulli_residue(n: int, p: int) -> Residue:
    return Residue(bernoulli_residues(n, p)[n], PrimePower(p, 1))


@lru_cache(maxsize=64)
def euler_residues(n_max: int, p: int) -> tuple[int, ...]:
    """E_0..E_{n_max} mod p (odd indices are zero)."""
    comb = _binomial_rows_mod(p, n_max) if n_max < p else None
    values = [0] * (n_max + 1)
    values[0] = 1
    for n2 in range(2, n_max + 1, 2):
        if comb is not None:
            s = sum(comb(n2, 2 * k) * values[n2 - 2 * k] for k in range(1, n2 // 2 + 1))
        else:
            s = sum(math.comb(n2, 2 * k) * values[n2 - 2 * k] for k in range(1, n2 // 2 + 1))
        values[n2] = -s % p
    return tuple(values)


def euler_residue(n: int, p: int) -> Residue:
    return Residue(euler_residues(n, p)[n], PrimePower(p, 1))


def cubic_char_sum(t: Residue, p: int | None = None) -> int:
    """Sum of (f(x)/p) over x mod p with f(x) = x^3 - 3(t^2+3)x + 2t(t^2-9)."""
    if t.pp.k != 1:
        raise ValueError("cubic_char_sum works modulo p only")
    p = t.pp.p if p is None else p
    tv = t.value
    a = -3 * (tv * tv + 3)
    b = 2 * tv * (tv * tv - 9)
    if p == 2:
        raise ValueError("cubic_char_sum needs an odd prime")
    return kernels.cubic_char_sum(a, b, p)
