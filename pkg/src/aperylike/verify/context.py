"""Per-prime cache of everything the claim evaluators read.

A context is created once per prime and then shared by every claim evaluated
at that prime. It is never shared between primes or processes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property

from .. import kernels
from ..exactmath import binomial
from ..modular import (
    PrimePower,
    Residue,
    bernoulli_residues,
    euler_residues,
    fermat_quotient,
    harmonic_residues,
    jacobi_symbol,
)
from ..quadforms import NotRepresentable, Representation, represent, represent_4p_11
from ..sequences import SequenceId, residues


class PrimeContext:
    def __init__(self, p: int):
        self.p = p
        self.half = (p - 1) // 2
        self._pp: dict[int, PrimePower] = {}
        self._seq: dict[tuple, list[int]] = {}
        self._sums: dict[tuple, int] = {}
        self._central: dict[int, list[int]] = {}
        self._reps: dict[int, Representation | None] = {}
        self._memo: dict = {}

    def memo(self, key, build):
        """Cache an arbitrary per-prime quantity under ``key``."""
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    def pp(self, k: int) -> PrimePower:
        pp = self._pp.get(k)
        if pp is None:
            pp = self._pp[k] = PrimePower(self.p, k)
        return pp

    def res(self, value, k: int) -> Residue:
        """Residue of an int or p-integral Fraction mod p^k."""
        return self.pp(k)(value)

    def inv(self, value: int, k: int) -> int:
        return pow(value, -1, self.p**k)

    def unit(self, m: int) -> bool:
        return m % self.p != 0

    @property
    def sign(self) -> int:
        """(-1)^((p-1)/2)."""
        return -1 if self.half % 2 else 1

    # --- sequence residues ----------------------------------------------

    def seq(self, seq: SequenceId, k: int) -> list[int]:
        """u_0..u_{p-1} mod p^k, from the recurrence."""
        key = (seq, k)
        vals = self._seq.get(key)
        if vals is None:
            vals = self._seq[key] = residues(seq, self.p - 1, self.p**k)
        return vals

    def central(self, k: int) -> list[int]:
        """C(2n, n) mod p^k for n = 0..p-1."""
        vals = self._central.get(k)
        if vals is None:
            m = self.p**k
            vals = self._central[k] = [binomial(2 * n, n) % m for n in range(self.p)]
        return vals

    def series_sum(self, coeffs: list[int], ratio: int, k: int) -> int:
        return kernels.power_sum(coeffs, ratio, self.p**k)

    def seq_sum(self, seq: SequenceId, m: int, k: int, *, central: bool = False, weight: str = "1", start: int = 0) -> int:
        """sum_{n=start}^{p-1} w(n) [C(2n,n)] u_n / m^n mod p^k.

        ``weight`` is one of "1", "n", "n+1", "2n+1".
        """
        key = (seq, m, k, central, weight, start)
        hit = self._sums.get(key)
        if hit is not None:
            return hit
        mod = self.p**k
        u = self.seq(seq, k)
        if central:
            c = self.central(k)
            coeffs = [u[n] * c[n] % mod for n in range(self.p)]
        else:
            coeffs = list(u)
        if weight != "1":
            w = {"n": lambda n: n, "n+1": lambda n: n + 1, "2n+1": lambda n: 2 * n + 1}[weight]
            coeffs = [coeffs[n] * w(n) % mod for n in range(self.p)]
        for n in range(min(start, self.p)):
            coeffs[n] = 0
        total = self.series_sum(coeffs, self.inv(m % mod, k), k)
        self._sums[key] = total
        return total

    # --- special values --------------------------------------------------

    @cached_property
    def bernoulli_p3(self) -> int:
        """B_{p-3} mod p."""
        return bernoulli_residues(self.p - 3, self.p)[self.p - 3]

    @cached_property
    def euler_p3(self) -> int:
        """E_{p-3} mod p."""
        return euler_residues(self.p - 3, self.p)[self.p - 3]

    def fermat(self, a, k: int = 1) -> int:
        return fermat_quotient(Fraction(a), self.pp(k)).value

    def harmonic(self, r: int, k: int, upto: int | None = None) -> list[int]:
        key = ("H", r, k, upto)
        vals = self._seq.get(key)
        if vals is None:
            vals = self._seq[key] = harmonic_residues(self.half if upto is None else upto, r, self.pp(k))
        return vals

    def legendre(self, a: int) -> int:
        return jacobi_symbol(a, self.p)

    def representation(self, d: int) -> Representation | None:
        """p = x^2 + d y^2 (d = 11 means 4p = x^2 + 11 y^2), or None."""
        if d not in self._reps:
            try:
                rep = represent_4p_11(self.p) if d == 11 else represent(self.p, d)
            except NotRepresentable:
                rep = None
            self._reps[d] = rep
        return self._reps[d]
