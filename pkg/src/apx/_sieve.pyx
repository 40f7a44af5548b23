# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sieve kernels; semantics mirror _sieve_py exactly.

All quantities fit in 64-bit signed integers for any table size the
wrapper admits (intermediates are bounded by 4*n_max).
"""

from cpython cimport array

import array


def ap_count_range(long long n_max):
    """values[n] = |AP(n)| for 1 <= n <= n_max (index 0 unused)."""
    cdef array.array out = array.array('q', bytes(8 * (n_max + 1)))
    cdef long long[::1] v = out
    cdef long long d, m, q, lo, r, start

    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            v[m] += 1

    d = 2
    while d * d <= n_max:
        q = d * (d - 1)
        for m in range(d * d, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q - 1) // 2
        d += 1

    d = 3
    while d * d < 2 * n_max:
        q = d * (d - 1)
        lo = d * d // 2 + 1
        start = ((lo + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q) // 2
        d += 2

    d = 2
    while d * d < 2 * n_max:
        q = d * (d - 1)
        lo = d * d // 2 + 1
        r = d // 2
        start = r + ((lo - r + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q) // 2
        d += 2

    return out


def apdiv_count_range(long long n_max):
    """values[n] = number of distinct AP partition lengths of n."""
    cdef array.array out = array.array('q', bytes(8 * (n_max + 1)))
    cdef long long[::1] v = out
    cdef long long d, m, lo, r, start

    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            v[m] += 1

    d = 2
    while d * d < 2 * n_max:
        lo = d * d // 2 + 1
        r = d // 2
        start = r + ((lo - r + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += 1
        d += 2

    return out
