"""Pure-Python sieve kernels; fallback when the compiled module is absent.

Must stay semantically identical to _sieve.pyx.  All loops are divisor-
pair iterations (for each d, walk its multiples or a residue class), so
the total work is O(N log N) additions with exact integer ceilings.
"""

from __future__ import annotations

import array


def _new_table(n_max: int) -> array.array:
    return array.array("q", bytes(8 * (n_max + 1)))


def _add_trivial(v: array.array, n_max: int) -> None:
    # one constant partition per divisor: classic divisor-count sieve
    for d in range(1, n_max + 1):
        for m in range(d, n_max + 1, d):
            v[m] += 1


def ap_count_range(n_max: int) -> array.array:
    """values[n] = |AP(n)| for 1 <= n <= n_max (index 0 unused)."""
    v = _new_table(n_max)
    _add_trivial(v, n_max)

    # even differences: d | n, d*d <= n; add the count of even k below
    # 2n/(d(d-1)), i.e. (ceil(2n/q) - 1) // 2 with q = d(d-1)
    d = 2
    while d * d <= n_max:
        q = d * (d - 1)
        for m in range(d * d, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q - 1) // 2
        d += 1

    # odd differences, odd d: an odd d is an odd-arithmetic divisor of n
    # exactly when d | n; need 2n > d*d, strictly
    d = 3
    while d * d < 2 * n_max:
        q = d * (d - 1)
        lo = d * d // 2 + 1
        start = ((lo + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q) // 2
        d += 2

    # odd differences, even d: membership (d | 2n, d not | n) is the
    # residue class n = d/2 (mod d)
    d = 2
    while d * d < 2 * n_max:
        q = d * (d - 1)
        lo = d * d // 2 + 1
        r = d // 2
        start = r + ((lo - r + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += ((2 * m + q - 1) // q) // 2
        d += 2

    return v


def apdiv_count_range(n_max: int) -> array.array:
    """values[n] = number of distinct AP partition lengths of n."""
    v = _new_table(n_max)
    _add_trivial(v, n_max)

    # beyond the divisors of n, the only extra lengths are even
    # odd-arithmetic divisors with d*d < 2n: one length each
    d = 2
    while d * d < 2 * n_max:
        lo = d * d // 2 + 1
        r = d // 2
        start = r + ((lo - r + d - 1) // d) * d
        for m in range(start, n_max + 1, d):
            v[m] += 1
        d += 2

    return v
