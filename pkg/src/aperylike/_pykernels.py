"""Pure-Python kernels; the reference behaviour for ``_ckernels``."""

from __future__ import annotations


def power_sum(coeffs, ratio: int, modulus: int) -> int:
    """Return sum(coeffs[i] * ratio**i) mod modulus by Horner's rule."""
    acc = 0
    ratio %= modulus
    for c in reversed(coeffs):
        acc = (acc * ratio + c) % modulus
    return acc


def recurrence_residues(first_kind: bool, a: int, b: int, c: int, n_max: int, modulus: int) -> list[int]:
    """Terms u_0..u_{n_max} of an Apery-like recurrence reduced mod ``modulus``.

    Every divisor (n+1)^2 or (n+1)^3 with n < n_max must be a unit.
    """
    values = [1 % modulus]
    if n_max >= 1:
        values.append(b % modulus)
    power = 3 if first_kind else 2
    for n in range(1, n_max):
        quad = a * n * (n + 1) + b
        if first_kind:
            lead = (2 * n + 1) * quad
        else:
            lead = quad
        num = (lead * values[n] - c * n**power * values[n - 1]) % modulus
        inv = pow((n + 1) ** power, -1, modulus)
        values.append(num * inv % modulus)
    return values


def legendre_table(p: int) -> list[int]:
    """Legendre symbol (x/p) for x = 0..p-1, for an odd prime p."""
    table = [-1] * p
    table[0] = 0
    for x in range(1, (p + 1) // 2):
        table[x * x % p] = 1
    return table


def cubic_char_sum(a: int, b: int, p: int) -> int:
    """Sum over x in Z/p of the Legendre symbol of x^3 + a*x + b."""
    table = legendre_table(p)
    a %= p
    b %= p
    total = 0
    for x in range(p):
        total += table[(x * x * x + a * x + b) % p]
    return total
