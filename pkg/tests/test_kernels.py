import random

import pytest

from aperylike import _pykernels, kernels
from aperylike.modular import is_prime

needs_cython = pytest.mark.skipif("cython" not in kernels.available_backends(), reason="extension not built")


@pytest.fixture
def restore_backend():
    saved = kernels.BACKEND
    yield
    kernels.use_backend(saved)


def test_python_power_sum():
    assert _pykernels.power_sum([1, 2, 3], 10, 1000) == 321
    assert _pykernels.power_sum([], 7, 11) == 0
    assert _pykernels.power_sum([5], 3, 2) == 1


def test_python_recurrence_matches_exact():
    from aperylike.sequences import values, SequenceId

    exact = values(SequenceId.A, 12)
    assert _pykernels.recurrence_residues(True, 17, 5, 1, 12, 13**3) == [v % 13**3 for v in exact]


def test_legendre_table():
    t = _pykernels.legendre_table(7)
    assert t == [0, 1, 1, -1, 1, -1, -1]


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


@needs_cython
def test_backends_agree(restore_backend):
    from aperylike import _ckernels

    rng = random.Random(7)
    primes = [p for p in range(5, 400) if is_prime(p)]
    for _ in range(200):
        p = rng.choice(primes)
        m = p ** rng.randint(1, 4)
        coeffs = [rng.randrange(m) for _ in range(rng.randint(0, 60))]
        ratio = rng.randrange(-m, m)
        assert _ckernels.power_sum(coeffs, ratio % m, m) == _pykernels.power_sum(coeffs, ratio, m)
        a, b, c = rng.randint(-20, 20), rng.randint(-8, 8), rng.randint(-300, 300)
        first = rng.random() < 0.5
        n_max = p - 1
        assert kernels.recurrence_residues(first, a, b, c, n_max, m) == _pykernels.recurrence_residues(first, a, b, c, n_max, m)
        assert _ckernels.legendre_table(p) == _pykernels.legendre_table(p)
        assert _ckernels.cubic_char_sum(a % p, b % p, p) == _pykernels.cubic_char_sum(a, b, p)


@needs_cython
def test_use_backend_switches_dispatch(restore_backend):
    args = ([3, 1, 4, 1, 5, 9, 2, 6], 1234, 10007**2)
    kernels.use_backend("python")
    slow = kernels.power_sum(*args)
    kernels.use_backend("cython")
    assert kernels.BACKEND == "cython"
    assert kernels.power_sum(*args) == slow


def test_large_modulus_falls_back(restore_backend):
    m = (2**61 - 1) ** 2
    coeffs = list(range(1, 30))
    assert kernels.power_sum(coeffs, 3, m) == sum(c * 3**i for i, c in enumerate(coeffs)) % m
