"""Hot inner loops of the verification sweep.

The compiled extension ``_ckernels`` is used when it was built; otherwise the
pure-Python versions in ``_pykernels`` are used. The compiled path only
handles moduli below 2**62 (products must fit in 128 bits); larger moduli are
always routed to Python.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

__all__ = [
    "BACKEND",
    "available_backends",
    "use_backend",
    "power_sum",
    "recurrence_residues",
    "legendre_table",
    "cubic_char_sum",
]

_C_LIMIT = 1 << 62

BACKEND = "cython" if _ckernels is not None else "python"


def available_backends() -> list[str]:
    return ["python"] if _ckernels is None else ["python", "cython"]


def use_backend(name: str) -> None:
    """Force a backend ("python" or "cython") for the rest of the process."""
    global BACKEND
    if name not in available_backends():
        raise ValueError(f"kernel backend {name!r} is not available")
    BACKEND = name


def _compiled(modulus: int):
    if BACKEND == "cython" and modulus < _C_LIMIT:
        return _ckernels
    return _pykernels


def power_sum(coeffs, ratio: int, modulus: int) -> int:
    """Return sum(coeffs[i] * ratio**i) mod modulus.

    ``coeffs`` must already be reduced into [0, modulus).
    """
    return _compiled(modulus).power_sum(coeffs, ratio, modulus)


def recurrence_residues(first_kind: bool, a: int, b: int, c: int, n_max: int, modulus: int) -> list[int]:
    return _compiled(modulus).recurrence_residues(first_kind, a, b, c, n_max, modulus)


def legendre_table(p: int) -> list[int]:
    return _compiled(p * p).legendre_table(p)


def cubic_char_sum(a: int, b: int, p: int) -> int:
    """Sum of Legendre symbols of x^3 + a x + b over x mod p (p an odd prime)."""
    return _compiled(p * p).cubic_char_sum(a, b, p)
