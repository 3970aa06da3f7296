from math import comb

import pytest

from aperylike import sequences
from aperylike.sequences import (
    IDENTITIES,
    SPECS,
    CacheFormatError,
    IntegralityViolation,
    Kind,
    SequenceId,
    SequenceSpec,
    _extend,
    check_identity,
    gf_check_theorem_3_2,
    identity_sides,
    read_cache,
    residues,
    table_by_recurrence,
    value_by_definition,
    values,
    write_cache,
)

G_LIST = (1, 12, 164, 2352, 34596, 516912, 7806224)
V_LIST = (1, 8, 88, 1088, 14296, 195008, 2728384)


def cb(k):
    return comb(2 * k, k)


# Straight-line oracles written with math.comb only, independent of the package.
ORACLES = {
    SequenceId.A: lambda n: sum(comb(n, k) ** 2 * comb(n + k, k) ** 2 for k in range(n + 1)),
    SequenceId.APRIME: lambda n: sum(comb(n, k) ** 2 * comb(n + k, k) for k in range(n + 1)),
    SequenceId.D: lambda n: sum(comb(n, k) ** 2 * cb(k) * cb(n - k) for k in range(n + 1)),
    SequenceId.F: lambda n: sum(comb(n, k) ** 3 for k in range(n + 1)),
    SequenceId.A_SMALL: lambda n: sum(comb(n, k) ** 2 * cb(k) for k in range(n + 1)),
    SequenceId.G: lambda n: sum(cb(k) ** 2 * cb(n - k) * 4 ** (n - k) for k in range(n + 1)),
    SequenceId.V: lambda n: sum(cb(k) ** 2 * cb(n - k) ** 2 for k in range(n + 1)),
    SequenceId.W: lambda n: sum(cb(k) * comb(3 * k, k) * comb(n, 3 * k) * (-3) ** (n - 3 * k) for k in range(n // 3 + 1)),
}


def test_fixture_lists_both_methods():
    assert tuple(value_by_definition(SequenceId.G, n) for n in range(7)) == G_LIST
    assert tuple(value_by_definition(SequenceId.V, n) for n in range(7)) == V_LIST
    assert values(SequenceId.G, 6) == G_LIST
    assert values(SequenceId.V, 6) == V_LIST


@pytest.mark.parametrize("seq,n,expected", [
    (SequenceId.G, 2, 164),
    (SequenceId.V, 4, 14296),
    (SequenceId.B_AZ, 4, -279),
    (SequenceId.F, 3, 56),
    (SequenceId.S, 2, 20),
])
def test_definition_examples(seq, n, expected):
    assert value_by_definition(seq, n) == expected


def test_recurrence_examples():
    assert table_by_recurrence(SequenceId.G, 2).values == (1, 12, 164)
    assert table_by_recurrence(SequenceId.V, 2).values == (1, 8, 88)
    assert table_by_recurrence(SequenceId.Q, 1).values == (1, -6)


@pytest.mark.parametrize("seq", list(SequenceId))
def test_dual_path_to_100(seq):
    rec = values(seq, 100)
    assert [value_by_definition(seq, n) for n in range(101)] == list(rec)


@pytest.mark.parametrize("seq", sorted(ORACLES, key=lambda s: s.value))
def test_against_comb_oracle(seq):
    rec = values(seq, 40)
    assert [ORACLES[seq](n) for n in range(41)] == list(rec)


def test_initial_terms_match_parameters():
    for seq, spec in SPECS.items():
        vals = values(seq, 1)
        assert vals == (1, spec.b)


POSITIVE = [SequenceId.G, SequenceId.V, SequenceId.F, SequenceId.S, SequenceId.A_SMALL,
            SequenceId.A, SequenceId.APRIME, SequenceId.D, SequenceId.T]


@pytest.mark.parametrize("seq", POSITIVE)
def test_positive(seq):
    assert all(v > 0 for v in values(seq, 100))


def test_kinds():
    first = {s for s, spec in SPECS.items() if spec.kind is Kind.FIRST}
    assert first == {SequenceId.A, SequenceId.D, SequenceId.B_AZ, SequenceId.T, SequenceId.V}


def test_wrong_parameters_raise_integrality_violation():
    bad = SequenceSpec(SequenceId.G, Kind.SECOND, 32, 12, 255, lambda n: 0)
    with pytest.raises(IntegralityViolation):
        _extend(bad, [1, 12], 10)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        value_by_definition(SequenceId.A, -1)
    with pytest.raises(ValueError):
        table_by_recurrence(SequenceId.A, -1)


@pytest.mark.parametrize("identity_id", sorted(IDENTITIES))
def test_identities_to_60(identity_id):
    assert all(check_identity(identity_id, n) for n in range(61))


def test_identity_examples():
    assert identity_sides("G-alt", 3) == (2352, 2352)
    assert identity_sides("V-from-G", 0) == (1, 1)
    assert identity_sides("Q-from-a", 1) == (-6, -6)


def test_single_binomial_v_form_is_false():
    # With C(2k,k) to the first power the alternating sum no longer gives V_n.
    def printed(n):
        return sum(cb(k) * comb(n, k) * comb(n + k, k) * (-1) ** k * 16 ** (n - k) for k in range(n + 1))

    assert printed(1) == 16 - 2 * 1 * 2 == 12 != V_LIST[1]
    assert any(printed(n) != V_LIST[n] for n in range(1, 7))


def test_generating_function():
    assert gf_check_theorem_3_2(0)
    assert gf_check_theorem_3_2(1)
    assert gf_check_theorem_3_2(6)
    assert gf_check_theorem_3_2(30)


@pytest.mark.parametrize("seq", list(SequenceId))
def test_residues_match_reduced_values(seq):
    for p, k in [(5, 3), (13, 2), (101, 4)]:
        m = p**k
        exact = values(seq, p - 1)
        assert residues(seq, p - 1, m) == [v % m for v in exact]


def test_cache_round_trip(tmp_path):
    path = tmp_path / "vals.txt"
    count = write_cache(path, [SequenceId.G, SequenceId.Q], 20)
    assert count == 42
    tables = read_cache(path)
    assert tables[SequenceId.G] == values(SequenceId.G, 20)
    assert tables[SequenceId.Q] == values(SequenceId.Q, 20)
    line = path.read_text().splitlines()[2]
    assert line == "G 2 164"


@pytest.mark.parametrize("text", [
    "G 0 1\nG 1 13\n",
    "G 0 2\n",
    "G 0 1\nG 2 164\n",
    "Z 0 1\n",
    "G 0\n",
    "G 0 1.5\n",
])
def test_cache_rejects_bad_files(tmp_path, text):
    path = tmp_path / "bad.txt"
    path.write_text(text)
    with pytest.raises(CacheFormatError):
        read_cache(path)


def test_tables_are_immutable_snapshots():
    t = table_by_recurrence(SequenceId.F, 5)
    longer = table_by_recurrence(SequenceId.F, 10)
    assert len(t) == 6 and longer.values[:6] == t.values
    with pytest.raises(TypeError):
        t.values[0] = 2
