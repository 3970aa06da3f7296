# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as ``_pykernels`` for moduli below 2**62."""

from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

MAX_MODULUS = 1 << 62


cdef inline u64 mulmod(u64 x, u64 y, u64 m) nogil:
    return <u64>((<u128>x * <u128>y) % <u128>m)


cdef i64 inverse_mod(i64 a, i64 m) except -1:
    cdef i64 old_r = a % m, r = m, old_s = 1, s = 0, q, t
    if old_r < 0:
        old_r += m
    while r != 0:
        q = old_r // r
        t = old_r - q * r
        old_r = r
        r = t
        t = old_s - q * s
        old_s = s
        s = t
    if old_r != 1:
        raise ValueError("base is not invertible for the given modulus")
    old_s %= m
    if old_s < 0:
        old_s += m
    return old_s


cdef inline u64 reduce_signed(object value, u64 m):
    return <u64>(value % m)


def power_sum(coeffs, ratio, modulus):
    cdef u64 m = modulus
    cdef u64 r = ratio % modulus
    cdef u64 acc = 0
    cdef Py_ssize_t i
    cdef list seq = list(coeffs)
    for i in range(len(seq) - 1, -1, -1):
        acc = (mulmod(acc, r, m) + <u64>seq[i]) % m
    return acc


def recurrence_residues(bint first_kind, a, b, c, Py_ssize_t n_max, modulus):
    cdef u64 m = modulus
    cdef u64 am = reduce_signed(a, m), bm = reduce_signed(b, m), cm = reduce_signed(c, m)
    cdef list values = [1 % modulus]
    cdef u64 prev, cur, lead, quad, num, npow, div, nn
    cdef Py_ssize_t n
    if n_max >= 1:
        values.append(bm)
    if n_max < 2:
        return values
    prev = 1 % m
    cur = bm
    for n in range(1, n_max):
        nn = <u64>n
        quad = (mulmod(am, mulmod(nn % m, (nn + 1) % m, m), m) + bm) % m
        if first_kind:
            lead = mulmod((2 * nn + 1) % m, quad, m)
            npow = mulmod(mulmod(nn % m, nn % m, m), nn % m, m)
            div = mulmod(mulmod((nn + 1) % m, (nn + 1) % m, m), (nn + 1) % m, m)
        else:
            lead = quad
            npow = mulmod(nn % m, nn % m, m)
            div = mulmod((nn + 1) % m, (nn + 1) % m, m)
        num = (mulmod(lead, cur, m) + m - mulmod(mulmod(cm, npow, m), prev, m)) % m
        num = mulmod(num, <u64>inverse_mod(<i64>div, <i64>m), m)
        values.append(num)
        prev = cur
        cur = num
    return values


def legendre_table(long p):
    cdef list table = [-1] * p
    cdef long x
    table[0] = 0
    for x in range(1, (p + 1) // 2):
        table[(x * x) % p] = 1
    return table


def cubic_char_sum(a, b, long p):
    cdef signed char *table = <signed char *> malloc(p * sizeof(signed char))
    cdef long x, am = a % p, bm = b % p, total = 0
    cdef u64 v
    if table == NULL:
        raise MemoryError()
    try:
        for x in range(p):
            table[x] = -1
        table[0] = 0
        for x in range(1, (p + 1) // 2):
            table[(x * x) % p] = 1
        for x in range(p):
            v = ((<u64>x * x % p) * x + <u64>am * x + bm) % p
            total += table[v]
    finally:
        free(table)
    return total
