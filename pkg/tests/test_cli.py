import io
import subprocess
import sys

import pytest

from aperylike.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_seq_recurrence():
    code, text = call("seq", "--id", "G", "--to", "6")
    assert code == 0
    assert text.splitlines() == [f"{n} {v}" for n, v in enumerate((1, 12, 164, 2352, 34596, 516912, 7806224))]


def test_seq_both_methods_and_range():
    code, text = call("seq", "--id", "V", "--from", "4", "--to", "6", "--method", "both")
    assert code == 0
    assert text.split() == ["4", "14296", "5", "195008", "6", "2728384"]


def test_seq_aliases():
    assert call("seq", "--id", "b", "--from", "4", "--to", "4", "--method", "sum") == (0, "4 -279\n")


@pytest.mark.parametrize("argv", [
    ("seq", "--id", "NOPE", "--to", "3"),
    ("seq", "--id", "G", "--from", "5", "--to", "3"),
    ("verify",),
    ("verify", "--claim", "thm-3.3", "--pmin", "50", "--pmax", "10"),
    ("verify", "--all", "--m-set", "1,x"),
    ("bogus",),
])
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_unknown_claim_exit_2():
    assert call("verify", "--claim", "thm-0.0")[0] == 2
    assert call("claims", "show", "thm-0.0")[0] == 2


def test_verify_human():
    code, text = call("verify", "--claim", "thm-3.3", "--pmax", "50")
    assert code == 0
    assert "thm-3.3" in text
    assert text.strip().splitlines()[-1] == "primes: 5..47  cases: 13  passed: 13  failed: 0  skipped: 0"


def test_verify_records_and_quiet():
    code, text = call("verify", "--claim", "thm-3.3", "--claim", "thm-4.1", "--pmax", "20", "--format", "records")
    assert code == 0
    assert text.startswith("#claim_id")
    assert "thm-4.1\t5\t-\t-\t5^3\t96\t96\ttrue\t-" in text
    assert call("verify", "--claim", "thm-3.3", "--pmax", "20", "--quiet") == (0, "")


def test_verify_failure_exit_1(monkeypatch):
    import dataclasses
    from aperylike.verify import claims as claims_mod

    claim = claims_mod.REGISTRY["thm-3.3"]

    def skewed(ctx, prm, opt):
        label, lhs, rhs = claim.evaluate(ctx, prm, opt)
        return label, lhs, rhs + 1

    monkeypatch.setitem(claims_mod.REGISTRY, "thm-3.3", dataclasses.replace(claim, evaluate=skewed))
    code, text = call("verify", "--claim", "thm-3.3", "--pmax", "11", "--quiet")
    assert code == 1
    assert text.splitlines()[0].startswith("FAIL thm-3.3 p=5")


def test_verify_m_set():
    code, text = call("verify", "--claim", "thm-3.4", "--pmax", "13", "--m-set", "3,5", "--format", "records")
    assert code == 0
    ms = {line.split("\t")[2].split(",")[0] for line in text.splitlines() if not line.startswith("#")}
    assert ms == {"m=3", "m=5"}


def test_claims_list_and_show():
    code, text = call("claims", "list")
    assert code == 0 and text.count("\n") >= 40
    code, text = call("claims", "show", "conj-2.3")
    assert code == 0
    assert "readings: plain, binomial" in text
    assert "kind: conjecture" in text


def test_gf_check():
    assert call("gf-check", "--order", "12") == (0, "OK order=12\n")


def test_cache_warm_and_read(tmp_path, monkeypatch):
    path = tmp_path / "c.txt"
    code, text = call("cache", "--file", str(path), "--mode", "warm", "--ids", "G,V", "--to", "10")
    assert code == 0 and "22" in text
    monkeypatch.setenv("APERYLIKE_CACHE", str(path))
    code, text = call("cache")
    assert code == 0
    assert text.splitlines() == ["G n=0..10 ok", "V n=0..10 ok"]


def test_cache_errors(tmp_path, monkeypatch):
    monkeypatch.delenv("APERYLIKE_CACHE", raising=False)
    assert call("cache")[0] == 2
    assert call("cache", "--file", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("G 0 7\n")
    assert call("cache", "--file", str(bad))[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "aperylike", "seq", "--id", "Q", "--to", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "0 1\n1 -6\n"
