"""Executable registry of the congruence statements.

Every claim turns a prime (plus optional parameters) into a pair of residues
at the modulus the statement prescribes. Evaluators return
``(case_label, lhs, rhs)``; they raise :class:`Skipped` for parameter
combinations the statement excludes.

Sums written as sum_{n<p} w(n) u_n / m^n are evaluated on residues of u_n
obtained straight from the recurrence, which is valid for n <= p-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from ..exactmath import binomial
from ..modular import cubic_char_sum, is_prime, jacobi_symbol
from ..quadforms import InternalInconsistency, normalize_x_mod4
from ..sequences import SequenceId, cb, gf_rhs_series, identity_sides, values
from .context import PrimeContext

G, V = SequenceId.G, SequenceId.V

DEFAULT_M_VALUES = tuple(range(-12, 0)) + tuple(range(1, 13)) + (48, 63, 72, 128, 576, -192, -4032)

KINDS = ("theorem", "lemma", "conjecture", "remark-conjecture")


class Skipped(Exception):
    """The (prime, params) combination lies outside the statement's hypotheses."""


@dataclass(frozen=True)
class Options:
    m_values: tuple[int, ...] = DEFAULT_M_VALUES
    index_m: tuple[int, ...] = (1, 2)
    index_r: tuple[int, ...] = (1, 2)
    index_p_max: int = 13
    max_index: int | None = None
    gf_max_order: int = 100


Params = tuple[tuple[str, int | str], ...]
Evaluator = Callable[[PrimeContext, dict, Options], tuple]


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str
    statement: str
    evaluate: Evaluator = field(repr=False, compare=False)
    min_p: int = 3
    condition: Callable[[int], bool] | None = field(default=None, repr=False, compare=False)
    condition_text: str = ""
    modulus: str = "p^2"
    param_space: Callable[[int, Options], list[Params]] | None = field(default=None, repr=False, compare=False)
    readings: tuple[str, ...] = ()
    default_pmax: int = 200
    index_capped: bool = False
    exact: bool = False
    # builds shared read-only state before worker processes are forked
    prepare: Callable[[Options], None] | None = field(default=None, repr=False, compare=False)

    @property
    def applicability(self) -> str:
        base = "odd prime" if self.min_p <= 3 else f"prime p >= {self.min_p}"
        return f"{base}, {self.condition_text}" if self.condition_text else base

    def inapplicable_reason(self, p: int, options: Options) -> str | None:
        """Why no case is evaluated at p, or None when p is in scope."""
        if p < self.min_p or not is_prime(p):
            return f"requires {self.applicability}"
        if self.condition is not None and not self.condition(p):
            return f"requires {self.condition_text}"
        if self.index_capped and p > options.index_p_max:
            return f"index cap: p > {options.index_p_max}"
        return None

    def params(self, p: int, options: Options) -> list[Params]:
        return [()] if self.param_space is None else self.param_space(p, options)


# --- shared helpers ------------------------------------------------------

_FORM_SPLITS = {
    4: (lambda p: p % 4 == 1, "p = x^2+4y^2", "p = 3 mod 4"),
    2: (lambda p: p % 8 in (1, 3), "p = x^2+2y^2", "p = 5,7 mod 8"),
    3: (lambda p: p % 3 == 1, "p = x^2+3y^2", "p = 2 mod 3"),
    7: (lambda p: p % 7 in (1, 2, 4), "p = x^2+7y^2", "p = 3,5,6 mod 7"),
    11: (lambda p: jacobi_symbol(p, 11) == 1, "4p = x^2+11y^2", "(p/11) = -1"),
}


def _split(ctx: PrimeContext, d: int):
    """(representation or None, branch label); the residue class and the search must agree."""
    in_class, yes, no = _FORM_SPLITS[d]
    rep = ctx.representation(d)
    if (rep is not None) != in_class(ctx.p):
        raise InternalInconsistency(f"form x^2+{d}y^2 at p={ctx.p}: residue class and search disagree")
    return rep, (yes if rep is not None else no)


def _sum(ctx: PrimeContext, seq, m: int, k: int, **kw):
    return ctx.res(ctx.seq_sum(seq, m, k, **kw), k)


def _top(ctx: PrimeContext, seq, k: int):
    """u_{p-1} mod p^k."""
    return ctx.res(ctx.seq(seq, k)[ctx.p - 1], k)


def _require_unit(ctx: PrimeContext, m: int, what: str = "m") -> None:
    if m % ctx.p == 0:
        raise Skipped(f"p divides {what}={m}")


def _m_params(extra: tuple[tuple[str, tuple], ...] = ()):
    def space(p: int, options: Options) -> list[Params]:
        out: list[Params] = []
        for m in options.m_values:
            base: Params = (("m", m),)
            combos = [base]
            for key, choices in extra:
                combos = [c + ((key, v),) for c in combos for v in choices]
            out.extend(combos)
        return out

    return space


def _fixed(*params: Params):
    return lambda p, options: list(params)


def _parts(*names):
    return _fixed(*[(("part", n),) for n in names])


def _index_params(extra: tuple[tuple[str, tuple], ...] = ()):
    def space(p: int, options: Options) -> list[Params]:
        combos: list[Params] = [(("m", m), ("r", r)) for m in options.index_m for r in options.index_r]
        for key, choices in extra:
            combos = [c + ((key, v),) for c in combos for v in choices]
        return combos

    return space


def _check_exponent(k: int) -> None:
    if k > 8:
        raise Skipped(f"modulus exponent {k} exceeds 8")


def _check_index(n: int, options: Options) -> None:
    if options.max_index is not None and n > options.max_index:
        raise Skipped(f"index {n} above max_index {options.max_index}")


def _central_quarter(p: int) -> int:
    """C((p-3)/2, (p-3)/4) for p = 3 mod 4."""
    return binomial((p - 3) // 2, (p - 3) // 4)


# --- identities ----------------------------------------------------------


def _identity(identity_id: str) -> Evaluator:
    def evaluate(ctx, prm, opt):
        lhs, rhs = identity_sides(identity_id, ctx.p)
        return "n = p", lhs, rhs

    return evaluate


def _identity_by_form(forms: dict[str, str]) -> Evaluator:
    def evaluate(ctx, prm, opt):
        lhs, rhs = identity_sides(forms[prm["form"]], ctx.p)
        return "n = p", lhs, rhs

    return evaluate


@lru_cache(maxsize=4)
def _gf_coefficients(order: int) -> tuple[Fraction, ...]:
    return tuple(gf_rhs_series(order).coeffs)


def _gf_coefficient(ctx, prm, opt):
    p = ctx.p
    if p > opt.gf_max_order:
        raise Skipped(f"series order {p} above gf_max_order {opt.gf_max_order}")
    # Truncations are compatible, so one expansion at the cap serves every p.
    coeff = _gf_coefficients(opt.gf_max_order)[p]
    if coeff.denominator != 1:
        return "coefficient of x^p", values(V, p)[p], str(coeff)
    return "coefficient of x^p", values(V, p)[p], int(coeff)


# --- G_n -----------------------------------------------------------------


def _g_top_with_correction(ctx, prm, opt):
    p, h, s = ctx.p, ctx.half, ctx.sign
    c = ctx.central(1)
    harm = ctx.harmonic(1, 1)
    inv16 = ctx.inv(16, 1)
    corr = sum(c[k] * c[k] * pow(inv16, k, p) * harm[k] * harm[k] for k in range(h + 1)) * ctx.inv(2, 1)
    bracket = (ctx.euler_p3 - 8 * s * ctx.fermat(2) ** 2 + corr) % p
    rhs = ctx.res(s * pow(256, p - 1, p**3) + p * p * bracket, 3)
    return "", _top(ctx, G, 3), rhs


def _g_half(ctx, prm, opt):
    p = ctx.p
    rep, label = _split(ctx, 4)
    lhs = ctx.res(ctx.seq(G, 2)[ctx.half], 2)
    rhs = ctx.res(4**p * rep.x**2 - 2 * p if rep else 0, 2)
    return label, lhs, rhs


def _half_binomial_lemma(ctx, prm, opt):
    k = prm["k"]
    lhs = ctx.res(ctx.central(2)[k], 2) * ctx.res(ctx.inv(-16 % ctx.p**2, 2), 2) ** k
    return "", lhs, ctx.res(binomial(ctx.half + k, 2 * k), 2)


def _half_k_params(p: int, options: Options) -> list[Params]:
    return [(("k", k),) for k in range(1, (p - 1) // 2 + 1)]


def _c4_coeffs(ctx: PrimeContext, k: int) -> list[int]:
    mod = ctx.p**k
    return ctx.memo(("c2c4", k), lambda: [cb(j) * binomial(4 * j, 2 * j) % mod for j in range(ctx.p)])


def _central_g_three_way(ctx, prm, opt):
    m = prm["m"]
    _require_unit(ctx, m)
    p, h, mod = ctx.p, ctx.half, ctx.p**2
    lhs = _sum(ctx, G, m, 2, central=True)
    c4 = _c4_coeffs(ctx, 2)
    if prm["part"] == "quartic-sum":
        c = ctx.central(2)
        coeffs = [c[j] * c4[j] % mod for j in range(h + 1)]
        ratio = (m - 64) * ctx.inv(m * m % mod, 2) % mod
        rhs = ctx.res(ctx.series_sum(coeffs, ratio, 2), 2)
    else:
        inner = ctx.series_sum(c4, ctx.inv(m % mod, 2), 2)
        rhs = ctx.res(inner * inner, 2)
    return "", lhs, rhs


def _central_g_form(m: int, d: int, yes: Callable, modulus_yes: int = 2, weight: str = "1", scale: int = 1):
    """scale * sum C(2n,n) w(n) G_n / m^n against yes(rep, p) on the representable branch, 0 mod p^2 otherwise."""

    def evaluate(ctx, prm, opt):
        _require_unit(ctx, m)
        rep, label = _split(ctx, d)
        k = modulus_yes if rep else 2
        lhs = _sum(ctx, G, m, k, central=True, weight=weight) * scale
        rhs = ctx.res(yes(rep, ctx.p) if rep else 0, k)
        return label, lhs, rhs

    return evaluate


def _central_g_zero(m: int, weight: str):
    def evaluate(ctx, prm, opt):
        return "", _sum(ctx, G, m, 2, central=True, weight=weight), ctx.res(0, 2)

    return evaluate


def _four_x2_minus_2p(rep, p):
    return 4 * rep.x**2 - 2 * p


def _four_x2(rep, p):
    return 4 * rep.x**2


def _septic_pair(ctx, prm, opt):
    m = prm["part"]
    _require_unit(ctx, m)
    return _central_g_form(m, 7, _four_x2, modulus_yes=1)(ctx, prm, opt)


def _g_over_16_mod_p3(ctx, prm, opt):
    p, h = ctx.p, ctx.half
    c = ctx.central(1)
    harm = ctx.harmonic(1, 1)
    inv16 = ctx.inv(16, 1)
    inner = sum(c[k] * c[k] * pow(inv16, k, p) * ctx.inv(k + 1, 1) * harm[k] for k in range(h + 1)) % p
    return "", _sum(ctx, G, 16, 3), ctx.res(p * p * (1 - inner), 3)


def _g_char_sums(ctx, prm, opt):
    m = prm["m"]
    _require_unit(ctx, m)
    p, h = ctx.p, ctx.half
    label = "degenerate: m = 16 mod p" if (m - 16) % p == 0 else ""
    lhs = _sum(ctx, G, m, 1)
    if prm["part"] == "legendre":
        c = ctx.central(1)
        coeffs = [c[k] * c[k] % p for k in range(h + 1)]
        inner = ctx.series_sum(coeffs, ctx.inv(m % p, 1), 1)
        rhs = ctx.res(jacobi_symbol(m * (m - 16), p) * inner, 1)
    else:
        t = ctx.res(1 - 32 * ctx.inv(m % p, 1), 1)
        symbol = jacobi_symbol(-3 * (1 + t.value), p)
        rhs = ctx.res(-symbol * cubic_char_sum(t), 1)
    return label, lhs, rhs


def _g_quarter_signs(ctx, prm, opt):
    p, m = ctx.p, prm["part"]
    rep, label = _split(ctx, 4)
    lhs = _sum(ctx, G, m, 1)
    if rep is None:
        return label, lhs, ctx.res(0, 1)
    x = normalize_x_mod4(rep).x
    if m != -16 and ((p - 1) // 4) % 2:
        lhs = -lhs
    return label + ", x = 1 mod 4", lhs, ctx.res(2 * x, 1)


def _g_top_euler(ctx, prm, opt):
    p, s = ctx.p, ctx.sign
    rhs = ctx.res(s * pow(256, p - 1, p**3) + 3 * p * p * ctx.euler_p3, 3)
    return "", _top(ctx, G, 3), rhs


def _g_over_16_p2(ctx, prm, opt):
    p = ctx.p
    return "", _sum(ctx, G, 16, 3), ctx.res((4 * ctx.sign - 3) * p * p, 3)


def _g_second_order(ctx, prm, opt):
    p, m = ctx.p, prm["m"]
    lhs = _sum(ctx, G, m, 2)
    if p % 4 == 1:
        rep, label = _split(ctx, 4)
        x = normalize_x_mod4(rep).x
        base = ctx.res(2 * x, 2) - ctx.res(Fraction(p, 2 * x), 2)
        if m != -16 and ((p - 1) // 4) % 2:
            base = -base
        return label + ", x = 1 mod 4", lhs, base
    reading = prm["reading"]
    if reading == "plain":
        a = (p - 3) // 4
        if a % p == 0:
            raise Skipped("(p-3)/4 is not invertible mod p")
    else:
        a = _central_quarter(p)
    px = ctx.res(Fraction(p, a), 2)
    if m == -16:
        rhs = px
    elif m == 8:
        rhs = px * Fraction(3 * (-1) ** ((p + 1) // 4), 2)
    else:
        rhs = px * Fraction((-1) ** ((p - 3) // 4), 2)
    return "p = 3 mod 4", lhs, rhs


def _second_order_params(parts: tuple[int, ...]):
    def space(p: int, options: Options) -> list[Params]:
        if p % 4 == 1:
            return [(("m", m),) for m in parts]
        return [(("m", m), ("reading", r)) for m in parts for r in ("plain", "binomial")]

    return space


# Weighted sums sharing one right-hand side: (m, multiplier, form d, value on the
# representable branch, value otherwise). Values are in the printed order.
_WEIGHTED_DISPLAYS = {
    72: (1, 4, lambda x, p: 4 * x * x - 3 * p, lambda p: p),
    576: (-8, 4, lambda x, p: 4 * x * x - 3 * p, lambda p: p),
    48: (1, 3, lambda x, p: 3 * p - 4 * x * x, lambda p: -p),
    -192: (4, 3, lambda x, p: 3 * p - 4 * x * x, lambda p: -p),
    63: (1, 7, lambda x, p: -8 * (4 * x * x - 3 * p), lambda p: -8 * p),
    -4032: (64, 7, lambda x, p: -8 * (4 * x * x - 3 * p), lambda p: -8 * p),
}


def _weighted_display(ctx, prm, opt):
    p, part = ctx.p, prm["part"]
    if part == 128:
        return _central_g_128_cubic(ctx)
    _require_unit(ctx, part)
    scale, d, with_x, without_x = _WEIGHTED_DISPLAYS[part]
    rep, label = _split(ctx, d)
    lhs = _sum(ctx, G, part, 2, central=True, weight="n") * scale
    if prm["reading"] == "row-order":
        value = with_x(rep.x, p) if rep else without_x(p)
    else:
        if rep is None:
            raise Skipped("same-row reading pairs the x-dependent value with a branch that has no x")
        value = without_x(p)
    return label, lhs, ctx.res(value, 2)


def _central_g_128_cubic(ctx):
    p = ctx.p
    lhs = _sum(ctx, G, 128, 3, central=True)
    if p % 8 in (1, 3):
        rep, label = _split(ctx, 2)
        x2 = rep.x**2
        rhs = ctx.res(4 * x2 - 2 * p, 3) - ctx.res(p * p * ctx.inv(4 * x2 % p, 1), 3)
        return label, lhs, rhs
    inv_sq = ctx.inv(binomial(p // 4, p // 8) ** 2 % p, 1)
    coeff = Fraction(1, 3) if p % 8 == 5 else Fraction(-3, 2)
    rhs = ctx.res(p * p * ctx.res(coeff * inv_sq, 1).value, 3)
    return f"p = {p % 8} mod 8", lhs, rhs


def _weighted_params(p: int, options: Options) -> list[Params]:
    out: list[Params] = [(("part", m), ("reading", r)) for m in _WEIGHTED_DISPLAYS for r in ("row-order", "same-row")]
    out.append((("part", 128),))
    return out


def _g_index_stable(ctx, prm, opt):
    p, m, r = ctx.p, prm["m"], prm["r"]
    _check_exponent(2 * r)
    hi, lo = m * p**r, m * p ** (r - 1)
    _check_index(hi, opt)
    g = values(G, hi)
    return f"n = {hi}", ctx.res(g[hi], 2 * r), ctx.res(g[lo], 2 * r)


def _odd_m_r2(m: int, r: int) -> None:
    if m % 2 == 0:
        raise Skipped("m must be odd")
    if r < 2:
        raise Skipped("r must be at least 2")


def _g_half_index_3mod4(ctx, prm, opt):
    p, m, r = ctx.p, prm["m"], prm["r"]
    _odd_m_r2(m, r)
    k = 2 * r - 1
    _check_exponent(k)
    hi, lo = (m * p**r - 1) // 2, (m * p ** (r - 2) - 1) // 2
    _check_index(hi, opt)
    g = values(G, hi)
    return f"n = {hi}", ctx.res(g[hi], k), ctx.res(p * p * g[lo], k)


def _g_half_index_1mod4(ctx, prm, opt):
    p, m, r = ctx.p, prm["m"], prm["r"]
    _odd_m_r2(m, r)
    _check_exponent(r)
    rep, label = _split(ctx, 4)
    hi = (m * p**r - 1) // 2
    mid = (m * p ** (r - 1) - 1) // 2
    lo = (m * p ** (r - 2) - 1) // 2
    _check_index(hi, opt)
    g = values(G, hi)
    rhs = (4 * rep.x**2 - 2 * p) * g[mid] - p * p * g[lo]
    return f"{label}, n = {hi}", ctx.res(g[hi], r), ctx.res(rhs, r)


# --- V_n -----------------------------------------------------------------


def _v_top(ctx, prm, opt):
    p = ctx.p
    return "", _top(ctx, V, 3), ctx.res(pow(256, p - 1, p**3), 3)


def _v_three_way(ctx, prm, opt):
    m = prm["m"]
    _require_unit(ctx, m)
    p, h = ctx.p, ctx.half
    if (m - 16) % p == 0 or (m + 16) % p == 0:
        raise Skipped("m = +-16 mod p")
    lhs = _sum(ctx, V, m, 1)
    inv_m = ctx.inv(m % p, 1)
    if prm["part"] == "g-sum":
        denom = (32 + m + 256 * inv_m) % p
        rhs = _sum(ctx, G, denom, 1, central=True)
    else:
        denom = (32 - m - 256 * inv_m) % p
        c = ctx.central(1)
        coeffs = [c[k] ** 3 % p for k in range(h + 1)]
        rhs = ctx.res(ctx.series_sum(coeffs, ctx.inv(denom, 1), 1), 1)
    return "", lhs, rhs


def _v_quarter(ctx, prm, opt):
    m = prm["part"]
    rep, label = _split(ctx, 4)
    rhs = ctx.res(4 * rep.x**2 if rep else 0, 1)
    return label, _sum(ctx, V, m, 1), rhs


def _v_minus16(ctx, prm, opt):
    rep, label = _split(ctx, 4)
    k = 2 if rep else 1
    rhs = ctx.res(4 * rep.x**2 - 2 * ctx.p if rep else 0, k)
    return label, _sum(ctx, V, -16, k), rhs


def _v_over_16_bernoulli(ctx, prm, opt):
    p = ctx.p
    tail = ctx.res(Fraction(7, 2) * ctx.bernoulli_p3, 1).value
    return "", _sum(ctx, V, 16, 4, start=1), ctx.res(p**3 * tail, 4)


def _v_weighted_euler(m: int, weight: str, with_sign: bool, euler_coeff: int, start: int = 0):
    def evaluate(ctx, prm, opt):
        p = ctx.p
        base = ctx.sign * p if with_sign else 0
        rhs = ctx.res(base + euler_coeff * p**3 * ctx.euler_p3, 4)
        return "", _sum(ctx, V, m, 4, weight=weight, start=start), rhs

    return evaluate


def _v_top_bernoulli(ctx, prm, opt):
    p = ctx.p
    tail = ctx.res(Fraction(-3, 2) * ctx.bernoulli_p3, 1).value
    return "", _top(ctx, V, 4), ctx.res(pow(256, p - 1, p**4) + p**3 * tail, 4)


def _v_second_order(ctx, prm, opt):
    p, m = ctx.p, prm["m"]
    lhs = _sum(ctx, V, m, 3)
    if p % 4 == 1:
        rep, label = _split(ctx, 4)
        x2 = rep.x**2
        rhs = ctx.res(4 * x2 - 2 * p, 3) - ctx.res(p * p * ctx.inv(4 * x2 % p, 1), 3)
        return label, lhs, rhs
    if prm["reading"] == "plain":
        base = (p - 3) // 2
    else:
        base = _central_quarter(p)
    inv_sq = ctx.inv(base * base % p, 1)
    coeff = Fraction(3, 4) if m in (8, -16) else Fraction(-1, 4)
    rhs = ctx.res(p * p * ctx.res(coeff * inv_sq, 1).value, 3)
    return "p = 3 mod 4", lhs, rhs


def _v_index_stable(ctx, prm, opt):
    p, m, r = ctx.p, prm["m"], prm["r"]
    k = 3 * r + 1
    _check_exponent(k)
    hi = m * p**r
    _check_index(hi, opt)
    v = values(V, max(hi, m * p))
    rhs = v[m * p ** (r - 1)] + p ** (3 * (r - 1)) * (v[m * p] - v[m])
    return f"n = {hi}", ctx.res(v[hi], k), ctx.res(rhs, k)


def _v_shift_numerator(p: int, m: int, r: int, reading: str, opt: Options) -> tuple[int, int]:
    """(index, V_index - 256^(m p^(r-1) (p-1)) V_(m p^(r-1) - 1)) under the given reading."""
    base = m * p ** (r - 1)
    idx = base if reading == "printed" else m * p**r - 1
    _check_index(max(idx, m * p - 1), opt)
    v = values(V, max(idx, m * p - 1))
    return idx, v[idx] - 256 ** (base * (p - 1)) * v[base - 1]


def _v_shift(ctx, prm, opt):
    p, m, r = ctx.p, prm["m"], prm["r"]
    k = 3 * r
    _check_exponent(k)
    reading = prm["reading"]
    if prm["part"] == "congruence":
        base = m * p ** (r - 1)
        idx = base if reading == "printed" else m * p**r - 1
        _check_index(idx, opt)
        v = values(V, idx)
        rhs = pow(256, base * (p - 1), p**k) * v[base - 1]
        return f"n = {idx}", ctx.res(v[idx], k), ctx.res(rhs, k)
    if p == 3:
        raise Skipped("quotient congruence requires p > 3")
    idx, num = _v_shift_numerator(p, m, r, reading, opt)
    _, ref = _v_shift_numerator(p, m, 1, "shifted", opt)
    if num % p**k or ref % p**3:
        raise Skipped(f"numerator not divisible by p^{k}")
    return f"n = {idx}", ctx.res(num // p**k, 1), ctx.res(ref // p**3, 1)


# --- b_n, A'_n, S_n, Q_n -------------------------------------------------


def _b_top(ctx, prm, opt):
    p = ctx.p
    return "", _top(ctx, SequenceId.B_AZ, 3), ctx.res(pow(81, p - 1, p**3), 3)


def _b_top_bernoulli(ctx, prm, opt):
    p = ctx.p
    tail = ctx.res(Fraction(-2, 27) * ctx.bernoulli_p3, 1).value
    return "", _top(ctx, SequenceId.B_AZ, 4), ctx.res(pow(81, p - 1, p**4) + p**3 * tail, 4)


def _aprime_central(ctx, prm, opt):
    rep, label = _split(ctx, 11)
    rhs = ctx.res(rep.x**2 if rep else 0, 1)
    return label, _sum(ctx, SequenceId.APRIME, 4, 1, central=True), rhs


def _s_weighted(ctx, prm, opt):
    return "", _sum(ctx, SequenceId.S, 8, 2, weight="n"), ctx.res(0, 2)


def _s_weighted_p3(ctx, prm, opt):
    p = ctx.p
    label, value = ("p = 1 mod 4", 0) if p % 4 == 1 else ("p = 3 mod 4", 2 * p * p)
    return label, _sum(ctx, SequenceId.S, 8, 3, weight="n"), ctx.res(value, 3)


def _q_over_minus8(ctx, prm, opt):
    return "", _sum(ctx, SequenceId.Q, -8, 2), ctx.res(1, 2)


def _q_over_minus9(ctx, prm, opt):
    return "", _sum(ctx, SequenceId.Q, -9, 2), ctx.res(jacobi_symbol(ctx.p, 3), 2)


# --- registry ------------------------------------------------------------

_4MOD = lambda p: p % 4 == 1  # noqa: E731
_3MOD = lambda p: p % 4 == 3  # noqa: E731
_SLOW = 100  # default sweep bound for claims needing Bernoulli/Euler/harmonic values

CLAIMS: tuple[Claim, ...] = (
    Claim("thm-2.1", "theorem", "G_n = sum C(n,k) (-1)^k C(2k,k)^2 16^(n-k), checked exactly at n = p",
          _identity("G-alt"), exact=True, modulus="exact"),
    Claim("thm-2.2a", "theorem",
          "G_(p-1) = (-1)^h 256^(p-1) + p^2 (E_(p-3) - 8(-1)^h q_p(2)^2 + 1/2 sum_(k<=h) C(2k,k)^2 H_k^2/16^k) mod p^3, h = (p-1)/2",
          _g_top_with_correction, min_p=5, modulus="p^3", default_pmax=_SLOW),
    Claim("thm-2.2b", "theorem", "G_((p-1)/2) = 4^p x^2 - 2p if p = x^2+4y^2, else 0, mod p^2",
          _g_half, min_p=5),
    Claim("lem-2.1", "lemma", "C(2n,n) G_n = sum C(2k,k)^2 C(4k,2k) C(k,n-k) (-64)^(n-k), checked exactly at n = p",
          _identity("G-conv"), exact=True, modulus="exact"),
    Claim("lem-2.3", "lemma", "C(2k,k)/(-16)^k = C((p-1)/2+k, 2k) mod p^2 for k = 1..(p-1)/2",
          _half_binomial_lemma, min_p=5, param_space=_half_k_params),
    Claim("thm-2.3", "theorem",
          "sum C(2n,n) G_n/m^n = sum_(k<=h) C(2k,k)^2 C(4k,2k) ((m-64)/m^2)^k = (sum C(2k,k) C(4k,2k)/m^k)^2 mod p^2",
          _central_g_three_way, param_space=_m_params((("part", ("quartic-sum", "square")),))),
    Claim("thm-2.4a", "theorem", "sum C(2n,n) G_n/128^n = 4x^2 - 2p if p = x^2+2y^2, else 0, mod p^2",
          _central_g_form(128, 2, _four_x2_minus_2p)),
    Claim("thm-2.4b", "theorem", "sum C(2n,n) n G_n/128^n = 0 mod p^2", _central_g_zero(128, "n")),
    Claim("thm-2.5a", "theorem", "sum C(2n,n) G_n/72^n = 4x^2 - 2p if p = x^2+4y^2, else 0, mod p^2",
          _central_g_form(72, 4, _four_x2_minus_2p), min_p=5),
    Claim("thm-2.5b", "theorem", "sum C(2n,n) G_n/576^n = 4x^2 mod p if p = x^2+4y^2, else 0 mod p^2",
          _central_g_form(576, 4, _four_x2, modulus_yes=1), min_p=5, modulus="p or p^2"),
    Claim("thm-2.5c", "theorem", "sum C(2n,n) G_n/48^n = 4x^2 - 2p if p = x^2+3y^2, else 0, mod p^2",
          _central_g_form(48, 3, _four_x2_minus_2p), min_p=5),
    Claim("thm-2.5d", "theorem", "sum C(2n,n) G_n/(-192)^n = 4x^2 mod p if p = x^2+3y^2, else 0 mod p^2",
          _central_g_form(-192, 3, _four_x2, modulus_yes=1), min_p=5, modulus="p or p^2"),
    Claim("thm-2.5e", "theorem",
          "sum C(2n,n) G_n/63^n = sum C(2n,n) G_n/(-4032)^n = 4x^2 mod p if p = x^2+7y^2, else 0 mod p^2",
          _septic_pair, min_p=5, modulus="p or p^2", param_space=_parts(63, -4032)),
    Claim("thm-2.6", "theorem", "sum G_n/16^n = p^2 (1 - sum_(k<=h) C(2k,k)^2 H_k/(16^k (k+1))) mod p^3",
          _g_over_16_mod_p3, modulus="p^3", default_pmax=_SLOW),
    Claim("thm-2.7", "theorem",
          "sum G_n/m^n = (m(m-16)/p) sum_(k<=h) C(2k,k)^2/m^k = -(-3(1+t)/p) sum_x (x^3-3(t^2+3)x+2t(t^2-9) / p) mod p, t = 1-32/m",
          _g_char_sums, modulus="p", param_space=_m_params((("part", ("legendre", "cubic")),))),
    Claim("thm-2.8", "theorem",
          "sum G_n/(-16)^n = (-1)^((p-1)/4) sum G_n/8^n = (-1)^((p-1)/4) sum G_n/32^n = 2x (x = 1 mod 4) or 0, mod p",
          _g_quarter_signs, modulus="p", param_space=_parts(-16, 8, 32)),
    Claim("conj-2.1", "conjecture", "G_(p-1) = (-1)^((p-1)/2) 256^(p-1) + 3p^2 E_(p-3) mod p^3",
          _g_top_euler, min_p=5, modulus="p^3", default_pmax=_SLOW),
    Claim("conj-2.2", "conjecture", "sum G_n/16^n = (4(-1)^((p-1)/2) - 3) p^2 mod p^3",
          _g_over_16_p2, modulus="p^3", default_pmax=_SLOW),
    Claim("conj-2.3", "conjecture",
          "sum G_n/m^n for m = -16, 8, 32: 2x - p/(2x) up to sign if p = x^2+4y^2, a multiple of p X if p = 3 mod 4, mod p^2",
          _g_second_order, param_space=_second_order_params((-16, 8, 32)), readings=("plain", "binomial"),
          default_pmax=_SLOW),
    Claim("conj-2.4", "conjecture",
          "weighted sums sum C(2n,n) n G_n/m^n mod p^2 for m = 72, 576, 48, -192, 63, -4032, and sum C(2n,n) G_n/128^n mod p^3",
          _weighted_display, min_p=5, modulus="p^2 or p^3", param_space=_weighted_params,
          readings=("row-order", "same-row"), default_pmax=_SLOW),
    Claim("conj-2.5", "conjecture", "G_(m p^r) = G_(m p^(r-1)) mod p^(2r)",
          _g_index_stable, modulus="p^(2r)", param_space=_index_params(), index_capped=True, default_pmax=_SLOW),
    Claim("conj-2.6", "conjecture", "G_((m p^r-1)/2) = p^2 G_((m p^(r-2)-1)/2) mod p^(2r-1), m odd, r >= 2",
          _g_half_index_3mod4, condition=_3MOD, condition_text="p = 3 mod 4", modulus="p^(2r-1)",
          param_space=_index_params(), index_capped=True, default_pmax=_SLOW),
    Claim("conj-2.7", "conjecture",
          "G_((m p^r-1)/2) = (4x^2-2p) G_((m p^(r-1)-1)/2) - p^2 G_((m p^(r-2)-1)/2) mod p^r, m odd, r >= 2",
          _g_half_index_1mod4, condition=_4MOD, condition_text="p = 1 mod 4", modulus="p^r",
          param_space=_index_params(), index_capped=True, default_pmax=_SLOW),
    Claim("eq-3.1", "theorem", "two binomial-sum forms of V_n, checked exactly at n = p",
          _identity_by_form({"first": "V-alt1", "second": "V-alt2"}), exact=True, modulus="exact",
          param_space=_fixed((("form", "first"),), (("form", "second"),))),
    Claim("thm-3.1", "theorem", "V_n = sum C(n,k) C(n+k,k) (-16)^(n-k) G_k, checked exactly at n = p",
          _identity("V-from-G"), exact=True, modulus="exact"),
    Claim("thm-3.2", "theorem",
          "sum V_n x^n = 1/(1-16x) sum C(2k,k)^3 (-x/(1-16x)^2)^k, coefficient of x^p compared exactly",
          _gf_coefficient, exact=True, modulus="exact",
          prepare=lambda opt: _gf_coefficients(opt.gf_max_order)),
    Claim("thm-3.3", "theorem", "V_(p-1) = 256^(p-1) mod p^3", _v_top, min_p=5, modulus="p^3"),
    Claim("thm-3.4", "theorem",
          "sum V_n/m^n = sum C(2k,k) G_k/(32+m+256/m)^k = sum_(k<=h) C(2k,k)^3/(32-m-256/m)^k mod p",
          _v_three_way, modulus="p", param_space=_m_params((("part", ("g-sum", "cube-sum")),))),
    Claim("thm-3.5a", "theorem", "sum V_n/8^n = sum V_n/32^n = 4x^2 if p = x^2+4y^2, else 0, mod p",
          _v_quarter, modulus="p", param_space=_parts(8, 32)),
    Claim("thm-3.5b", "theorem", "sum V_n/(-16)^n = 4x^2 - 2p mod p^2 if p = x^2+4y^2, else 0 mod p",
          _v_minus16, modulus="p^2 or p"),
    Claim("thm-3.6", "theorem", "sum_(n>=1) V_n/16^n = (7/2) p^3 B_(p-3) mod p^4",
          _v_over_16_bernoulli, modulus="p^4", default_pmax=_SLOW),
    Claim("rem-3.1-32", "theorem", "sum_(n>=1) n V_n/32^n = -2 p^3 E_(p-3) mod p^4",
          _v_weighted_euler(32, "n", False, -2, start=1), modulus="p^4", default_pmax=_SLOW),
    Claim("rem-3.1-33", "theorem", "sum (n+1) V_n/8^n = (-1)^((p-1)/2) p + 5 p^3 E_(p-3) mod p^4",
          _v_weighted_euler(8, "n+1", True, 5), modulus="p^4", default_pmax=_SLOW),
    Claim("rem-3.1-34", "theorem", "sum (2n+1) V_n/(-16)^n = (-1)^((p-1)/2) p + 3 p^3 E_(p-3) mod p^4",
          _v_weighted_euler(-16, "2n+1", True, 3), modulus="p^4", default_pmax=_SLOW),
    Claim("conj-3.1", "conjecture", "V_(p-1) = 256^(p-1) - (3/2) p^3 B_(p-3) mod p^4",
          _v_top_bernoulli, min_p=5, modulus="p^4", default_pmax=_SLOW),
    Claim("conj-3.2", "conjecture",
          "sum V_n/m^n for m = 8, -16, 32: 4x^2 - 2p - p^2/(4x^2) if p = x^2+4y^2, a multiple of p^2 X^2 if p = 3 mod 4, mod p^3",
          _v_second_order, min_p=5, modulus="p^3", param_space=_second_order_params((8, -16, 32)),
          readings=("plain", "binomial"), default_pmax=_SLOW),
    Claim("conj-3.3", "conjecture", "V_(m p^r) = V_(m p^(r-1)) + p^(3(r-1)) (V_(mp) - V_m) mod p^(3r+1)",
          _v_index_stable, min_p=5, modulus="p^(3r+1)", param_space=_index_params(), index_capped=True,
          default_pmax=_SLOW),
    Claim("conj-3.4", "conjecture",
          "V_n = 256^(m p^(r-1) (p-1)) V_(m p^(r-1) - 1) mod p^(3r), plus the quotient congruence mod p",
          _v_shift, modulus="p^(3r) or p", readings=("printed", "shifted"),
          param_space=_index_params((("part", ("congruence", "quotient")), ("reading", ("printed", "shifted")))),
          index_capped=True, default_pmax=_SLOW),
    Claim("eq-4.1", "theorem", "two binomial-sum forms of b_n, checked exactly at n = p",
          _identity_by_form({"first": "b-alt1", "second": "b-alt2"}), exact=True, modulus="exact",
          param_space=_fixed((("form", "first"),), (("form", "second"),))),
    Claim("thm-4.1", "theorem", "b_(p-1) = 81^(p-1) mod p^3", _b_top, min_p=5, modulus="p^3"),
    Claim("rem-4.1-conj", "remark-conjecture", "b_(p-1) = 81^(p-1) - (2/27) p^3 B_(p-3) mod p^4",
          _b_top_bernoulli, min_p=5, modulus="p^4", default_pmax=_SLOW),
    Claim("thm-4.2", "theorem", "sum C(2n,n) A'_n/4^n = x^2 if 4p = x^2+11y^2, else 0, mod p",
          _aprime_central, condition=lambda p: p != 11, condition_text="p != 11", modulus="p"),
    Claim("thm-4.3", "theorem", "sum_(n>=1) n S_n/8^n = 0 mod p^2", _s_weighted),
    Claim("conj-4.1", "conjecture", "sum_(n>=1) n S_n/8^n = 0 if p = 1 mod 4, 2p^2 if p = 3 mod 4, mod p^3",
          _s_weighted_p3, modulus="p^3", default_pmax=_SLOW),
    Claim("thm-4.4a", "theorem", "sum Q_n/(-8)^n = 1 mod p^2", _q_over_minus8, min_p=5),
    Claim("thm-4.4b", "theorem", "sum Q_n/(-9)^n = (p/3) mod p^2", _q_over_minus9, min_p=5),
)

REGISTRY: dict[str, Claim] = {c.id: c for c in CLAIMS}
