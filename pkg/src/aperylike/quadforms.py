"""Representations of primes by x^2 + d*y^2 (d = 2, 3, 4, 7) and 4p = x^2 + 11*y^2."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .modular import is_prime, jacobi_symbol

__all__ = [
    "Representation",
    "NotRepresentable",
    "InternalInconsistency",
    "represent",
    "represent_4p_11",
    "normalize_x_mod4",
    "sqrt_mod_prime",
    "cornacchia",
    "exhaustive_representation",
]

SUPPORTED_D = (2, 3, 4, 7)
EXHAUSTIVE_BELOW = 50


class NotRepresentable(Exception):
    """The prime has no representation by the form.

    Expected outcome, not an error: it selects the "0 (mod p^k)" branch of a
    case split.
    """


class InternalInconsistency(RuntimeError):
    pass


@dataclass(frozen=True)
class Representation:
    p: int
    d: int
    x: int
    y: int
    scale: int = 1

    def __post_init__(self):
        if self.y < 0:
            raise ValueError("y must be nonnegative")
        if self.scale * self.p != self.x * self.x + self.d * self.y * self.y:
            raise ValueError(f"{self.scale}*{self.p} != {self.x}^2 + {self.d}*{self.y}^2")


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of a mod odd prime p, or None when a is a non-residue."""
    a %= p
    if a == 0:
        return 0
    if jacobi_symbol(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi_symbol(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def cornacchia(p: int, d: int) -> tuple[int, int] | None:
    """Solve x^2 + d*y^2 = p with x, y >= 0 by Euclidean descent, or return None."""
    r0 = sqrt_mod_prime(-d, p)
    if r0 is None:
        return None
    if 2 * r0 < p:
        r0 = p - r0
    a, b = p, r0
    bound = math.isqrt(p)
    while b > bound:
        a, b = b, a % b
    rest = p - b * b
    if rest % d:
        return None
    y = math.isqrt(rest // d)
    if y * y * d != rest:
        return None
    return b, y


def exhaustive_representation(n: int, d: int) -> list[tuple[int, int]]:
    """All (x, y) with x, y >= 0 and x^2 + d*y^2 = n."""
    found = []
    for y in range(math.isqrt(n // d) + 1):
        rest = n - d * y * y
        x = math.isqrt(rest)
        if x * x == rest:
            found.append((x, y))
    return found


def represent(p: int, d: int) -> Representation:
    """Write the odd prime p as x^2 + d*y^2 with x, y > 0.

    Raises :class:`NotRepresentable` when no such pair exists.
    """
    if d not in SUPPORTED_D:
        raise ValueError(f"unsupported form coefficient d={d}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if d % p == 0:
        raise ValueError(f"p={p} divides d={d}")
    if p < EXHAUSTIVE_BELOW:
        sols = [(x, y) for x, y in exhaustive_representation(p, d) if x > 0 and y > 0]
        sol = sols[0] if sols else None
    else:
        sol = cornacchia(p, d)
    if sol is None:
        raise NotRepresentable(f"{p} != x^2 + {d}y^2")
    x, y = sol
    return Representation(p, d, x, y)


def represent_4p_11(p: int) -> Representation:
    """Write 4p = x^2 + 11*y^2 with x, y > 0, when (p/11) = 1."""
    if p in (2, 11) or not is_prime(p):
        raise ValueError(f"p={p} must be a prime other than 2 and 11")
    if jacobi_symbol(p, 11) != 1:
        raise NotRepresentable(f"({p}/11) = -1")
    sols = [(x, y) for x, y in exhaustive_representation(4 * p, 11) if x > 0 and y > 0]
    if not sols:
        raise InternalInconsistency(f"({p}/11) = 1 but 4p = x^2 + 11y^2 has no solution")
    x, y = sols[0]
    return Representation(p, 11, x, y, scale=4)


def normalize_x_mod4(rep: Representation) -> Representation:
    """Flip the sign of x so that x = 1 (mod 4); x is odd when d = 4."""
    if rep.d != 4:
        raise ValueError("normalize_x_mod4 applies to p = x^2 + 4y^2 only")
    if rep.x % 4 == 1:
        return rep
    return replace(rep, x=-rep.x)
