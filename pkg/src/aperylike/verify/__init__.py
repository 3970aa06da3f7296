"""Claim registry and prime-sweep harness."""

from .claims import CLAIMS, DEFAULT_M_VALUES, KINDS, Claim, Options, Skipped
from .context import PrimeContext
from .harness import (
    InternalError,
    UnknownClaim,
    evaluate_case,
    list_claims,
    lookup,
    select_kinds,
    summarize,
    verify_all,
    verify_claim_range,
    verify_claims,
)
from .results import CaseResult, Report, format_records, parse_records

__all__ = [
    "CLAIMS",
    "DEFAULT_M_VALUES",
    "KINDS",
    "CaseResult",
    "Claim",
    "InternalError",
    "Options",
    "PrimeContext",
    "Report",
    "Skipped",
    "UnknownClaim",
    "evaluate_case",
    "format_records",
    "list_claims",
    "lookup",
    "parse_records",
    "select_kinds",
    "summarize",
    "verify_all",
    "verify_claim_range",
    "verify_claims",
]
