"""Case results, sweep reports, and the tab-separated records format."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

from ..modular import PrimePower, Residue

__all__ = ["CaseResult", "Report", "RECORD_FIELDS", "format_records", "parse_records", "compare"]

RECORD_FIELDS = ("claim_id", "p", "params", "case_label", "modulus", "lhs", "rhs", "holds", "skipped_reason")


@dataclass(frozen=True)
class CaseResult:
    """One (claim, prime, params) evaluation.

    ``modulus`` is None for exact identities (lhs/rhs are then plain ints)
    and for skipped cases.
    """

    claim_id: str
    p: int
    params: tuple[tuple[str, int | str], ...] = ()
    case_label: str = ""
    modulus: PrimePower | None = None
    lhs: Residue | int | None = None
    rhs: Residue | int | None = None
    holds: bool | None = None
    skipped_reason: str | None = None

    @property
    def param_dict(self) -> dict:
        return dict(self.params)

    @property
    def status(self) -> str:
        if self.skipped_reason is not None:
            return "skip"
        return "pass" if self.holds else "fail"

    @property
    def reading(self) -> str | None:
        return self.param_dict.get("reading")

    def to_record(self) -> str:
        params = ",".join(f"{k}={v}" for k, v in self.params) or "-"
        if isinstance(self.lhs, Residue):
            lhs, rhs = str(self.lhs.value), str(self.rhs.value)
        else:
            lhs = "-" if self.lhs is None else str(self.lhs)
            rhs = "-" if self.rhs is None else str(self.rhs)
        if self.modulus is not None:
            modulus = str(self.modulus)
        else:
            modulus = "exact" if self.holds is not None else "-"
        holds = "-" if self.holds is None else ("true" if self.holds else "false")
        fields = [self.claim_id, str(self.p), params, self.case_label or "-", modulus, lhs, rhs, holds,
                  self.skipped_reason or "-"]
        return "\t".join(fields)

    @classmethod
    def from_record(cls, line: str) -> "CaseResult":
        parts = line.rstrip("\n").split("\t")
        if len(parts) != len(RECORD_FIELDS):
            raise ValueError(f"expected {len(RECORD_FIELDS)} tab-separated fields, got {len(parts)}")
        claim_id, p, params, label, modulus, lhs, rhs, holds, reason = parts
        parsed_params = []
        if params != "-":
            for item in params.split(","):
                key, _, value = item.partition("=")
                parsed_params.append((key, _maybe_int(value)))
        pp = None if modulus in ("-", "exact") else PrimePower.parse(modulus)

        def side(text):
            if text == "-":
                return None
            return Residue(int(text), pp) if pp is not None else int(text)

        return cls(
            claim_id=claim_id,
            p=int(p),
            params=tuple(parsed_params),
            case_label="" if label == "-" else label,
            modulus=pp,
            lhs=side(lhs),
            rhs=side(rhs),
            holds=None if holds == "-" else holds == "true",
            skipped_reason=None if reason == "-" else reason,
        )


def _maybe_int(text: str):
    try:
        return int(text)
    except ValueError:
        return text


def compare(claim_id: str, p: int, params, label: str, lhs: Residue, rhs: Residue) -> CaseResult:
    """Build a CaseResult; comparing residues with different moduli raises."""
    holds = lhs == rhs
    return CaseResult(claim_id, p, tuple(params), label, lhs.pp, lhs, rhs, holds)


def compare_exact(claim_id: str, p: int, params, label: str, lhs: int, rhs: int) -> CaseResult:
    return CaseResult(claim_id, p, tuple(params), label, None, lhs, rhs, lhs == rhs)


def skipped(claim_id: str, p: int, params, reason: str, label: str = "") -> CaseResult:
    return CaseResult(claim_id, p, tuple(params), label, skipped_reason=reason)


@dataclass
class ClaimTally:
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    @property
    def total(self) -> int:
        return self.passed + self.failed + self.skipped


@dataclass
class Report:
    claim_ids: list[str]
    primes: list[int]
    cases: list[CaseResult]
    kinds: dict[str, str] = field(default_factory=dict)
    readings: dict[str, dict[str, bool]] = field(default_factory=dict)

    @classmethod
    def assemble(cls, claim_ids, primes, cases: Iterable[CaseResult], kinds=None, readings=None) -> "Report":
        """Resolve alternative readings, then tally.

        A reading is validated when every evaluated case carrying it holds. If
        at least one reading of a claim is validated, failing cases of the
        other readings are relabelled as skipped (their ``holds`` stays
        False). Otherwise every failing case stays a failure.
        """
        cases = list(cases)
        verdicts: dict[str, dict[str, bool]] = {}
        for claim_id, names in (readings or {}).items():
            if claim_id not in claim_ids:
                continue
            seen = {name: [] for name in names}
            for c in cases:
                if c.claim_id == claim_id and c.reading in seen and c.skipped_reason is None:
                    seen[c.reading].append(c.holds)
            verdicts[claim_id] = {name: bool(v) and all(v) for name, v in seen.items()}
        resolved = []
        for c in cases:
            v = verdicts.get(c.claim_id)
            if (v and c.reading is not None and c.skipped_reason is None and not c.holds
                    and any(v.values()) and not v.get(c.reading, False)):
                c = replace(c, skipped_reason=f"reading {c.reading} rejected")
            resolved.append(c)
        return cls(list(claim_ids), list(primes), resolved, dict(kinds or {}), verdicts)

    def tally(self) -> dict[str, ClaimTally]:
        out = {cid: ClaimTally() for cid in self.claim_ids}
        for c in self.cases:
            t = out.setdefault(c.claim_id, ClaimTally())
            status = c.status
            if status == "pass":
                t.passed += 1
            elif status == "fail":
                t.failed += 1
            else:
                t.skipped += 1
        return out

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.cases)

    @property
    def failed(self) -> int:
        return sum(c.status == "fail" for c in self.cases)

    @property
    def skipped(self) -> int:
        return sum(c.status == "skip" for c in self.cases)

    @property
    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if c.status == "fail"]

    def merged(self, other: "Report") -> "Report":
        return Report(
            self.claim_ids + [c for c in other.claim_ids if c not in self.claim_ids],
            sorted(set(self.primes) | set(other.primes)),
            self.cases + other.cases,
            {**self.kinds, **other.kinds},
            {**self.readings, **other.readings},
        )


def format_records(report: Report) -> str:
    lines = ["#" + "\t".join(RECORD_FIELDS)]
    lines.extend(c.to_record() for c in report.cases)
    for cid, t in report.tally().items():
        lines.append(f"#summary\t{cid}\tpassed={t.passed}\tfailed={t.failed}\tskipped={t.skipped}")
    for cid, verdict in report.readings.items():
        for name, ok in verdict.items():
            lines.append(f"#reading\t{cid}\t{name}\t{'validated' if ok else 'rejected'}")
    lines.append(f"#total\tpassed={report.passed}\tfailed={report.failed}\tskipped={report.skipped}")
    return "\n".join(lines) + "\n"


def parse_records(text: str) -> list[CaseResult]:
    return [CaseResult.from_record(line) for line in text.splitlines() if line and not line.startswith("#")]
