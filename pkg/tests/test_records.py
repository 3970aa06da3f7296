from aperylike.modular import PrimePower
from aperylike.verify import CaseResult, format_records, parse_records, verify_claims


def test_round_trip_single_cases():
    pp = PrimePower(13, 2)
    cases = [
        CaseResult("thm-x", 13, (("m", -12), ("part", "square")), "p = 1 mod 4", pp, pp(5), pp(5), True),
        CaseResult("thm-y", 13, (), "", None, 2352, 2352, True),
        CaseResult("thm-z", 11, (), "", skipped_reason="p divides 11"),
        CaseResult("conj-q", 7, (("reading", "plain"),), "", PrimePower(7, 3), PrimePower(7, 3)(3),
                   PrimePower(7, 3)(4), False, "reading plain rejected"),
    ]
    for c in cases:
        assert CaseResult.from_record(c.to_record()) == c


def test_report_round_trip():
    report = verify_claims(["thm-2.1", "thm-2.7", "conj-2.3", "thm-4.2"], 5, 40)
    text = format_records(report)
    assert parse_records(text) == report.cases
    lines = text.splitlines()
    assert lines[0].startswith("#claim_id\tp\tparams")
    assert lines[-1] == f"#total\tpassed={report.passed}\tfailed=0\tskipped={report.skipped}"
    assert "#reading\tconj-2.3\tbinomial\tvalidated" in lines
    assert all(len(l.split("\t")) == 9 for l in lines if not l.startswith("#"))


def test_exact_records_say_exact():
    record = verify_claims(["thm-2.1"], 5, 5).cases[0].to_record()
    assert record.split("\t")[4] == "exact"
