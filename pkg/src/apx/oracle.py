"""Brute-force reference for AP partitions.

Deliberately independent of the divisor machinery: it iterates over
(length, first term) and solves for the difference, so agreement with
the formula side is a meaningful check.  Intentionally naive; do not
import anything from the rest of the package here.
"""

from __future__ import annotations

MAX_ORACLE_N = 5000


def brute_enumerate(n: int) -> list[list[int]]:
    """Every nondecreasing AP part list summing to n, by direct search.

    For each length d >= 2 and first term a1 with d*a1 <= n, the sum is
    n iff 2*(n - d*a1) is divisible by d*(d-1); the quotient is the
    (automatically nonnegative) difference.  Results come in the same
    (diff ascending, length ascending) order the enumerator uses.
    """
    if not 1 <= n <= MAX_ORACLE_N:
        raise ValueError(f"n must be in [1, {MAX_ORACLE_N}], got {n}")
    found = [[n]]
    for d in range(2, n + 1):
        q = d * (d - 1)
        for a1 in range(1, n // d + 1):
            r = 2 * (n - d * a1)
            if r % q == 0:
                k = r // q
                found.append([a1 + i * k for i in range(d)])
    found.sort(key=lambda parts: (parts[1] - parts[0] if len(parts) > 1 else 0, len(parts)))
    return found


def brute_count(n: int) -> int:
    """len(brute_enumerate(n))."""
    return len(brute_enumerate(n))
