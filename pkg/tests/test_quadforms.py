import pytest

from aperylike.modular import is_prime, jacobi_symbol
from aperylike.quadforms import (
    NotRepresentable,
    Representation,
    cornacchia,
    exhaustive_representation,
    normalize_x_mod4,
    represent,
    represent_4p_11,
    sqrt_mod_prime,
)

ODD_PRIMES = [p for p in range(3, 1001) if is_prime(p)]

CLASS = {
    4: lambda p: p % 4 == 1,
    2: lambda p: p % 8 in (1, 3),
    3: lambda p: p % 3 == 1,
    7: lambda p: p % 7 in (1, 2, 4),
}


@pytest.mark.parametrize("p,d,x,y", [(13, 4, 3, 1), (3, 2, 1, 1), (7, 3, 2, 1)])
def test_represent_examples(p, d, x, y):
    rep = represent(p, d)
    assert (abs(rep.x), rep.y) == (x, y)


def test_represent_not_representable():
    with pytest.raises(NotRepresentable):
        represent(7, 4)


def test_represent_rejects_bad_input():
    with pytest.raises(ValueError):
        represent(3, 3)
    with pytest.raises(ValueError):
        represent(15, 2)
    with pytest.raises(ValueError):
        represent(13, 5)


@pytest.mark.parametrize("d", [2, 3, 4, 7])
def test_representability_matches_residue_class(d):
    for p in ODD_PRIMES:
        if d % p == 0:
            continue
        try:
            rep = represent(p, d)
        except NotRepresentable:
            assert not CLASS[d](p), (p, d)
            continue
        assert CLASS[d](p), (p, d)
        assert rep.x**2 + d * rep.y**2 == p and rep.x > 0 and rep.y > 0


def test_x_is_odd_for_d4():
    for p in ODD_PRIMES:
        if p % 4 == 1:
            assert represent(p, 4).x % 2 == 1


def test_4p_11_examples():
    assert (represent_4p_11(3).x, represent_4p_11(3).y) == (1, 1)
    assert (represent_4p_11(5).x, represent_4p_11(5).y) == (3, 1)
    with pytest.raises(NotRepresentable):
        represent_4p_11(7)
    with pytest.raises(ValueError):
        represent_4p_11(11)


def test_4p_11_matches_symbol():
    for p in ODD_PRIMES:
        if p == 11:
            continue
        if jacobi_symbol(p, 11) == 1:
            rep = represent_4p_11(p)
            assert rep.x**2 + 11 * rep.y**2 == 4 * p and rep.scale == 4
        else:
            with pytest.raises(NotRepresentable):
                represent_4p_11(p)


def test_cornacchia_agrees_with_exhaustive_for_d4():
    for p in ODD_PRIMES:
        if p % 4 != 1 or p > 500:
            continue
        sols = [(x, y) for x, y in exhaustive_representation(p, 4) if x > 0 and y > 0]
        assert len(sols) == 1
        assert cornacchia(p, 4) == sols[0]


def test_sqrt_mod_prime():
    for p in ODD_PRIMES[:40]:
        for a in range(p):
            r = sqrt_mod_prime(a, p)
            if jacobi_symbol(a, p) == -1:
                assert r is None
            else:
                assert r * r % p == a


def test_normalize_x_mod4():
    rep = normalize_x_mod4(represent(13, 4))
    assert rep.x == -3 and rep.y == 1
    assert normalize_x_mod4(represent(5, 4)).x == 1
    for p in ODD_PRIMES:
        if p % 4 == 1:
            r = represent(p, 4)
            n = normalize_x_mod4(r)
            assert n.x % 4 == 1 and n.x**2 == r.x**2 and normalize_x_mod4(n) == n


def test_normalize_needs_d4():
    with pytest.raises(ValueError):
        normalize_x_mod4(represent(3, 2))


def test_representation_invariant():
    with pytest.raises(ValueError):
        Representation(13, 4, 3, 2)
    with pytest.raises(ValueError):
        Representation(13, 4, 3, -1)
