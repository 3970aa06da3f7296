"""The twelve Apery-like sequences, each computable by its defining binomial
sum and by its three-term recurrence, plus the alternative identities that
relate them.

First kind::

    (n+1)^3 u_{n+1} = (2n+1)(a n(n+1) + b) u_n - c n^3 u_{n-1}

Second kind::

    (n+1)^2 u_{n+1} = (a n(n+1) + b) u_n - c n^2 u_{n-1}

with u_0 = 1 and u_1 = b in both cases.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable

from . import kernels
from .exactmath import binomial
from .series import PowerSeries, compose_sum

__all__ = [
    "SequenceId",
    "Kind",
    "SequenceSpec",
    "SequenceTable",
    "IntegralityViolation",
    "CacheFormatError",
    "SPECS",
    "IDENTITIES",
    "value_by_definition",
    "table_by_recurrence",
    "values",
    "residues",
    "check_identity",
    "gf_check_theorem_3_2",
    "gf_rhs_series",
    "write_cache",
    "read_cache",
]


class SequenceId(str, enum.Enum):
    A = "A"
    APRIME = "APRIME"
    D = "D"
    T = "T"
    B_AZ = "B_AZ"
    G = "G"
    V = "V"
    F = "F"
    S = "S"
    A_SMALL = "A_SMALL"
    Q = "Q"
    W = "W"

    def __str__(self) -> str:
        return self.value


class Kind(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"


class IntegralityViolation(ArithmeticError):
    """A recurrence step produced a non-integer: the (a, b, c) wiring is wrong."""


class CacheFormatError(ValueError):
    pass


def C(n: int, k: int) -> int:
    return binomial(n, k)


def cb(k: int) -> int:
    """Central binomial coefficient C(2k, k)."""
    return binomial(2 * k, k)


# --- defining sums -------------------------------------------------------


def _apery_a(n):
    return sum(C(n, k) ** 2 * C(n + k, k) ** 2 for k in range(n + 1))


def _apery_aprime(n):
    return sum(C(n, k) ** 2 * C(n + k, k) for k in range(n + 1))


def _domb(n):
    return sum(C(n, k) ** 2 * cb(k) * cb(n - k) for k in range(n + 1))


def _t(n):
    return sum(C(n, k) ** 2 * C(2 * k, n) ** 2 for k in range(n + 1))


def _vanishing_sum(n: int, k_max: int, gate: Callable[[int], int], rest: Callable[[int, int], int], limit: Callable[[int], bool]) -> int:
    """Sum gate(k) * rest(k, gate(k)) over 0 <= k <= k_max, skipping k where gate vanishes.

    ``limit(k)`` states when the term is expected to vanish; a nonzero gate
    past the limit means a transcription error in the summand.
    """
    total = 0
    for k in range(k_max + 1):
        g = gate(k)
        if g == 0:
            continue
        assert not limit(k), f"term k={k} should vanish for n={n}"
        total += rest(k, g)
    return total


def _almkvist_zudilin(n):
    return _vanishing_sum(
        n,
        n,
        lambda k: C(n, 3 * k),
        lambda k, g: cb(k) * C(3 * k, k) * g * C(n + k, k) * (-3) ** (n - 3 * k),
        lambda k: 3 * k > n,
    )


def _g(n):
    return sum(cb(k) ** 2 * cb(n - k) * 4 ** (n - k) for k in range(n + 1))


def _v(n):
    return sum(cb(k) ** 2 * cb(n - k) ** 2 for k in range(n + 1))


def _franel(n):
    return sum(C(n, k) ** 3 for k in range(n + 1))


def _s(n):
    return _vanishing_sum(
        n,
        n,
        lambda k: C(n, 2 * k),
        lambda k, g: cb(k) ** 2 * g * 4 ** (n - 2 * k),
        lambda k: 2 * k > n,
    )


def _a_small(n):
    return sum(C(n, k) ** 2 * cb(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _franel_prefix(n_max: int) -> tuple[int, ...]:
    return tuple(_franel(k) for k in range(n_max + 1))


def _q(n):
    f = _franel_prefix(n)
    return sum(C(n, k) * (-8) ** (n - k) * f[k] for k in range(n + 1))


def _w(n):
    return _vanishing_sum(
        n,
        n,
        lambda k: C(n, 3 * k),
        lambda k, g: cb(k) * C(3 * k, k) * g * (-3) ** (n - 3 * k),
        lambda k: 3 * k > n,
    )


@dataclass(frozen=True)
class SequenceSpec:
    id: SequenceId
    kind: Kind
    a: int
    b: int
    c: int
    definition: Callable[[int], int] = field(repr=False)
    description: str = ""
    dependencies: tuple[SequenceId, ...] = ()

    @property
    def params(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


_S = SequenceId
_SPEC_LIST = [
    SequenceSpec(_S.A, Kind.FIRST, 17, 5, 1, _apery_a, "Apery numbers A_n = sum C(n,k)^2 C(n+k,k)^2"),
    SequenceSpec(_S.D, Kind.FIRST, 10, 4, 64, _domb, "Domb numbers D_n = sum C(n,k)^2 C(2k,k) C(2n-2k,n-k)"),
    SequenceSpec(_S.B_AZ, Kind.FIRST, -7, -3, 81, _almkvist_zudilin,
                 "Almkvist-Zudilin numbers b_n = sum C(2k,k) C(3k,k) C(n,3k) C(n+k,k) (-3)^(n-3k)"),
    SequenceSpec(_S.T, Kind.FIRST, 12, 4, 16, _t, "T_n = sum C(n,k)^2 C(2k,n)^2"),
    SequenceSpec(_S.V, Kind.FIRST, 16, 8, 256, _v, "V_n = sum C(2k,k)^2 C(2n-2k,n-k)^2"),
    SequenceSpec(_S.APRIME, Kind.SECOND, 11, 3, -1, _apery_aprime, "A'_n = sum C(n,k)^2 C(n+k,k)"),
    SequenceSpec(_S.F, Kind.SECOND, 7, 2, -8, _franel, "Franel numbers f_n = sum C(n,k)^3"),
    SequenceSpec(_S.S, Kind.SECOND, 12, 4, 32, _s, "S_n = sum C(2k,k)^2 C(n,2k) 4^(n-2k)"),
    SequenceSpec(_S.A_SMALL, Kind.SECOND, 10, 3, 9, _a_small, "a_n = sum C(n,k)^2 C(2k,k)"),
    SequenceSpec(_S.Q, Kind.SECOND, -17, -6, 72, _q, "Q_n = sum C(n,k) (-8)^(n-k) f_k", (_S.F,)),
    SequenceSpec(_S.W, Kind.SECOND, -9, -3, 27, _w, "W_n = sum C(2k,k) C(3k,k) C(n,3k) (-3)^(n-3k)"),
    SequenceSpec(_S.G, Kind.SECOND, 32, 12, 256, _g, "G_n = sum C(2k,k)^2 C(2n-2k,n-k) 4^(n-k)"),
]
SPECS: dict[SequenceId, SequenceSpec] = {s.id: s for s in _SPEC_LIST}


def _spec(seq) -> SequenceSpec:
    return SPECS[SequenceId(seq)]


def value_by_definition(seq, n: int) -> int:
    """Evaluate the primary defining binomial sum at index n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return _spec(seq).definition(n)


# --- recurrence tables ---------------------------------------------------


@dataclass(frozen=True)
class SequenceTable:
    id: SequenceId
    values: tuple[int, ...]
    method: str

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


_TABLES: dict[SequenceId, list[int]] = {}
_TABLE_LOCK = threading.Lock()


def _extend(spec: SequenceSpec, vals: list[int], n_max: int) -> None:
    a, b, c = spec.a, spec.b, spec.c
    first = spec.kind is Kind.FIRST
    power = 3 if first else 2
    for n in range(len(vals) - 1, n_max):
        quad = a * n * (n + 1) + b
        lead = (2 * n + 1) * quad if first else quad
        num = lead * vals[n] - c * n**power * vals[n - 1]
        q, r = divmod(num, (n + 1) ** power)
        if r:
            raise IntegralityViolation(f"{spec.id}: step n={n} gives {num}/{(n + 1) ** power}")
        vals.append(q)


def table_by_recurrence(seq, n_max: int) -> SequenceTable:
    """u_0..u_{n_max} via the three-term recurrence with exact division.

    Tables are cached per process and only ever extended; the returned
    table is an immutable snapshot.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    spec = _spec(seq)
    vals = _TABLES.get(spec.id)
    if vals is None or len(vals) <= n_max:
        with _TABLE_LOCK:
            vals = _TABLES.setdefault(spec.id, [1, spec.b])
            if len(vals) <= n_max:
                _extend(spec, vals, n_max)
    return SequenceTable(spec.id, tuple(vals[: n_max + 1]), "recurrence")


def values(seq, n_max: int) -> tuple[int, ...]:
    return table_by_recurrence(seq, n_max).values


def residues(seq, n_max: int, modulus: int) -> list[int]:
    """u_0..u_{n_max} mod ``modulus`` straight from the recurrence, without big integers.

    Valid when every n+1 <= n_max is a unit mod ``modulus``; for a prime
    power p^k that means n_max <= p-1.
    """
    spec = _spec(seq)
    return kernels.recurrence_residues(spec.kind is Kind.FIRST, spec.a, spec.b, spec.c, n_max, modulus)


# --- identities ----------------------------------------------------------


def _ident_sum(n, term):
    return sum(term(n, k) for k in range(n + 1))


def _transform(n: int, weight: Callable[[int, int], int], dep) -> int:
    u = values(dep, n)
    return sum(weight(n, k) * u[k] for k in range(n + 1))


def _b_alt1(n):
    return _vanishing_sum(
        n,
        n,
        lambda k: C(n + k, 4 * k),
        lambda k, g: cb(k) ** 2 * C(4 * k, 2 * k) * g * (-3) ** (n - 3 * k),
        lambda k: 3 * k > n,
    )


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    lhs: Callable[[int], int] = field(repr=False)
    rhs: Callable[[int], int] = field(repr=False)


def _rec(seq):
    return lambda n: values(seq, n)[n]


IDENTITIES: dict[str, Identity] = {
    i.id: i
    for i in [
        Identity("G-alt", "G_n = sum C(n,k) (-1)^k C(2k,k)^2 16^(n-k)", _rec(_S.G),
                 lambda n: _ident_sum(n, lambda n, k: C(n, k) * (-1) ** k * cb(k) ** 2 * 16 ** (n - k))),
        Identity("G-conv", "C(2n,n) G_n = sum C(2k,k)^2 C(4k,2k) C(k,n-k) (-64)^(n-k)",
                 lambda n: cb(n) * values(_S.G, n)[n],
                 lambda n: _ident_sum(n, lambda n, k: cb(k) ** 2 * C(4 * k, 2 * k) * C(k, n - k) * (-64) ** (n - k))),
        # C(2k,k) must be squared: C(n,k) C(n+k,k) = C(2k,k) C(n+k,2k) makes this equal to V-alt2.
        Identity("V-alt1", "V_n = sum C(2k,k)^2 C(n,k) C(n+k,k) (-1)^k 16^(n-k)", _rec(_S.V),
                 lambda n: _ident_sum(n, lambda n, k: cb(k) ** 2 * C(n, k) * C(n + k, k) * (-1) ** k * 16 ** (n - k))),
        Identity("V-alt2", "V_n = sum C(2k,k)^3 C(n+k,2k) (-1)^k 16^(n-k)", _rec(_S.V),
                 lambda n: _ident_sum(n, lambda n, k: cb(k) ** 3 * C(n + k, 2 * k) * (-1) ** k * 16 ** (n - k))),
        Identity("V-from-G", "V_n = sum C(n,k) C(n+k,k) (-16)^(n-k) G_k", _rec(_S.V),
                 lambda n: _transform(n, lambda n, k: C(n, k) * C(n + k, k) * (-16) ** (n - k), _S.G)),
        Identity("b-alt1", "b_n = sum C(2k,k)^2 C(4k,2k) C(n+k,4k) (-3)^(n-3k)", _rec(_S.B_AZ), _b_alt1),
        Identity("b-alt2", "b_n = sum C(2k,k)^2 C(4k,2k) C(n+3k,4k) (-27)^(n-k)", _rec(_S.B_AZ),
                 lambda n: _ident_sum(n, lambda n, k: cb(k) ** 2 * C(4 * k, 2 * k) * C(n + 3 * k, 4 * k) * (-27) ** (n - k))),
        Identity("S-alt", "S_n = sum C(2k,k)^2 C(k,n-k) (-4)^(n-k)", _rec(_S.S),
                 lambda n: _ident_sum(n, lambda n, k: cb(k) ** 2 * C(k, n - k) * (-4) ** (n - k))),
        Identity("S-def2", "S_n = sum C(n,k) C(2k,k) C(2n-2k,n-k)", _rec(_S.S),
                 lambda n: _ident_sum(n, lambda n, k: C(n, k) * cb(k) * cb(n - k))),
        Identity("F-def2", "f_n = sum C(n,k)^2 C(2k,n)", _rec(_S.F),
                 lambda n: _ident_sum(n, lambda n, k: C(n, k) ** 2 * C(2 * k, n))),
        Identity("Q-from-f", "Q_n = sum C(n,k) (-8)^(n-k) f_k", _rec(_S.Q),
                 lambda n: _transform(n, lambda n, k: C(n, k) * (-8) ** (n - k), _S.F)),
        Identity("Q-from-a", "Q_n = sum C(n,k) (-9)^(n-k) a_k", _rec(_S.Q),
                 lambda n: _transform(n, lambda n, k: C(n, k) * (-9) ** (n - k), _S.A_SMALL)),
    ]
}


def identity_sides(identity_id: str, n: int) -> tuple[int, int]:
    ident = IDENTITIES[identity_id]
    return ident.lhs(n), ident.rhs(n)


def check_identity(identity_id: str, n: int) -> bool:
    """True iff both sides of the registered identity agree exactly at n."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    lhs, rhs = identity_sides(identity_id, n)
    return lhs == rhs


# --- generating function -------------------------------------------------


def gf_rhs_series(order: int) -> PowerSeries:
    """(1/(1-16x)) * sum_k C(2k,k)^3 (-x/(1-16x)^2)^k, truncated at x^order."""
    one_minus = PowerSeries([1, -16], order)
    inv = one_minus.reciprocal()
    inner = -PowerSeries.x(order) * inv * inv
    return inv * compose_sum([cb(k) ** 3 for k in range(order + 1)], inner)


def gf_check_theorem_3_2(order: int) -> bool:
    """Compare the expanded generating function with V_0..V_order."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    series = gf_rhs_series(order)
    v = values(_S.V, order)
    return all(series[n] == v[n] for n in range(order + 1))


# --- cache files ---------------------------------------------------------


def write_cache(path, ids, n_max: int) -> int:
    """Write ``<id> <n> <value>`` lines for each id, n = 0..n_max. Returns line count."""
    lines = []
    for seq in ids:
        seq = SequenceId(seq)
        for n, v in enumerate(values(seq, n_max)):
            lines.append(f"{seq.value} {n} {v}\n")
    Path(path).write_text("".join(lines))
    return len(lines)


def read_cache(path) -> dict[SequenceId, tuple[int, ...]]:
    """Parse and validate a cache file; u_0 = 1 and u_1 = b are checked per id."""
    tables: dict[SequenceId, list[int]] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise CacheFormatError(f"line {lineno}: expected '<id> <n> <value>'")
        try:
            seq = SequenceId(parts[0])
            n, v = int(parts[1]), int(parts[2])
        except ValueError as exc:
            raise CacheFormatError(f"line {lineno}: {exc}") from None
        vals = tables.setdefault(seq, [])
        if n != len(vals):
            raise CacheFormatError(f"line {lineno}: {seq} index {n} out of order (expected {len(vals)})")
        vals.append(v)
    for seq, vals in tables.items():
        spec = SPECS[seq]
        if vals[0] != 1 or (len(vals) > 1 and vals[1] != spec.b):
            raise CacheFormatError(f"{seq}: initial values {vals[:2]} do not match u_0 = 1, u_1 = {spec.b}")
    return {seq: tuple(vals) for seq, vals in tables.items()}
