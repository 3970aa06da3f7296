"""Prime sweeps over the claim registry."""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from ..modular import primes_between
from .claims import CLAIMS, REGISTRY, Claim, Options, Skipped
from .context import PrimeContext
from .results import CaseResult, Report, compare, compare_exact, skipped

__all__ = [
    "UnknownClaim",
    "InternalError",
    "list_claims",
    "lookup",
    "evaluate_case",
    "verify_claims",
    "verify_claim_range",
    "verify_all",
    "select_kinds",
]

KIND_FILTERS = {
    "theorem": ("theorem", "lemma"),
    "lemma": ("lemma",),
    "conjecture": ("conjecture", "remark-conjecture"),
    "all": ("theorem", "lemma", "conjecture", "remark-conjecture"),
}


class UnknownClaim(KeyError):
    pass


class InternalError(RuntimeError):
    """An evaluator failed for a reason its statement does not account for."""


def list_claims() -> list[Claim]:
    return list(CLAIMS)


def lookup(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None


def select_kinds(kinds: str = "all") -> list[str]:
    if kinds not in KIND_FILTERS:
        raise ValueError(f"unknown kinds filter {kinds!r}")
    wanted = KIND_FILTERS[kinds]
    return [c.id for c in CLAIMS if c.kind in wanted]


def _run(claim: Claim, ctx: PrimeContext, params, options: Options) -> CaseResult:
    prm = dict(params)
    try:
        label, lhs, rhs = claim.evaluate(ctx, prm, options)
    except Skipped as exc:
        return skipped(claim.id, ctx.p, params, str(exc))
    except Exception as exc:
        raise InternalError(f"{claim.id} at p={ctx.p} {prm}: {type(exc).__name__}: {exc}") from exc
    if claim.exact:
        return compare_exact(claim.id, ctx.p, params, label, lhs, rhs)
    return compare(claim.id, ctx.p, params, label, lhs, rhs)


def _cases_at(claim: Claim, ctx: PrimeContext, options: Options) -> list[CaseResult]:
    reason = claim.inapplicable_reason(ctx.p, options)
    if reason is not None:
        return [skipped(claim.id, ctx.p, (), reason)]
    return [_run(claim, ctx, params, options) for params in claim.params(ctx.p, options)]


def evaluate_case(claim_id: str, p: int, params=(), options: Options | None = None,
                  ctx: PrimeContext | None = None) -> CaseResult:
    """Evaluate one (claim, prime, params) combination."""
    claim = lookup(claim_id)
    options = options or Options()
    ctx = ctx or PrimeContext(p)
    if isinstance(params, dict):
        params = tuple(params.items())
    params = tuple(params)
    reason = claim.inapplicable_reason(p, options)
    if reason is not None:
        return skipped(claim.id, p, params, reason)
    return _run(claim, ctx, params, options)


def _prime_task(args) -> tuple[int, list[tuple[str, list[CaseResult]]]]:
    p, claim_ids, options = args
    ctx = PrimeContext(p)
    return p, [(cid, _cases_at(REGISTRY[cid], ctx, options)) for cid in claim_ids]


def verify_claims(claim_ids: Sequence[str], p_min: int = 5, p_max: int | None = None,
                  options: Options | None = None, jobs: int = 1) -> Report:
    """Sweep the given claims over primes in [p_min, p_max].

    With ``p_max=None`` each claim uses its own default bound. Cases come out
    in registry order, then ascending p, then parameter order, whatever the
    number of worker processes.
    """
    options = options or Options()
    claims = [lookup(cid) for cid in claim_ids]
    ordered = [c.id for c in CLAIMS if c in claims]
    bounds = {c.id: (p_max if p_max is not None else c.default_pmax) for c in claims}
    if p_min > max(bounds.values(), default=p_min):
        raise ValueError("p_min exceeds p_max")
    primes = primes_between(p_min, max(bounds.values(), default=p_min))
    tasks = [(p, tuple(cid for cid in ordered if p <= bounds[cid]), options) for p in primes]
    if jobs > 1 and len(tasks) > 1:
        # Warm shared caches once here so forked workers inherit them.
        for c in claims:
            if c.prepare is not None and p_min <= bounds[c.id]:
                c.prepare(options)
        # Largest primes first keeps workers busy; order is restored below.
        with ProcessPoolExecutor(max_workers=jobs, mp_context=_pool_context()) as pool:
            results = list(pool.map(_prime_task, sorted(tasks, key=lambda t: -t[0]), chunksize=1))
    else:
        results = [_prime_task(t) for t in tasks]
    by_key: dict[tuple[str, int], list[CaseResult]] = {}
    for p, per_claim in results:
        for cid, cases in per_claim:
            by_key[(cid, p)] = cases
    cases: list[CaseResult] = []
    for cid in ordered:
        for p in primes:
            cases.extend(by_key.get((cid, p), ()))
    kinds = {cid: REGISTRY[cid].kind for cid in ordered}
    readings = {cid: REGISTRY[cid].readings for cid in ordered if REGISTRY[cid].readings}
    return Report.assemble(ordered, primes, cases, kinds, readings)


def _pool_context():
    if "fork" in multiprocessing.get_all_start_methods():
        return multiprocessing.get_context("fork")
    return None


def verify_claim_range(claim_id: str, p_min: int, p_max: int, options: Options | None = None,
                       jobs: int = 1) -> Report:
    if p_min > p_max:
        raise ValueError("p_min exceeds p_max")
    return verify_claims([claim_id], p_min, p_max, options, jobs)


def verify_all(p_min: int = 5, p_max: int | None = None, kinds: str = "all",
               options: Options | None = None, jobs: int = 1) -> Report:
    return verify_claims(select_kinds(kinds), p_min, p_max, options, jobs)


def summarize(report: Report, claim_ids: Iterable[str] | None = None) -> str:
    """Human table: one row per claim with pass/fail/skip counts."""
    tally = report.tally()
    ids = list(claim_ids) if claim_ids is not None else list(tally)
    width = max((len(c) for c in ids), default=8)
    lines = [f"{'claim':<{width}}  {'kind':<17}  {'passed':>6}  {'failed':>6}  {'skipped':>7}"]
    for cid in ids:
        t = tally[cid]
        kind = report.kinds.get(cid, "")
        lines.append(f"{cid:<{width}}  {kind:<17}  {t.passed:>6}  {t.failed:>6}  {t.skipped:>7}")
    for cid, verdict in report.readings.items():
        named = ", ".join(f"{name}: {'validated' if ok else 'rejected'}" for name, ok in verdict.items())
        lines.append(f"readings for {cid}: {named}")
    for c in report.failures:
        prm = ",".join(f"{k}={v}" for k, v in c.params) or "-"
        lines.append(f"FAIL {c.claim_id} p={c.p} params={prm} {c.case_label} "
                     f"lhs={_show(c.lhs)} rhs={_show(c.rhs)} mod {c.modulus or 'exact'}")
    primes = report.primes
    span = f"{primes[0]}..{primes[-1]}" if primes else "none"
    lines.append(f"primes: {span}  cases: {len(report.cases)}  passed: {report.passed}  "
                 f"failed: {report.failed}  skipped: {report.skipped}")
    return "\n".join(lines)


def _show(value) -> str:
    return str(getattr(value, "value", value))
