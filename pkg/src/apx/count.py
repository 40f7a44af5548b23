"""Closed-form counting of arithmetic-progression partitions.

``ap_count`` evaluates the divisor-indexed formula for the number of
partitions of n whose nondecreasing parts form an arithmetic progression:
tau(n) constant partitions, plus one term per small even-arithmetic
divisor (even differences) and per small odd-arithmetic divisor (odd
differences).  Every boundary test is exact integer or rational
arithmetic; no square roots of floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .kcore import Parity, divisor_set

# Guardrail for single-n counting queries.  Trial division up to
# sqrt(2n) stays comfortably fast within this range.
MAX_COUNT_N = 10**12


@dataclass(frozen=True)
class TauTriple:
    """Divisor counts of n: all, odd-only, and even divisors."""

    tau: int
    tau_odd: int
    tau_even: int


@dataclass(frozen=True)
class CountBreakdown:
    """The three summands of the partition count and their total."""

    n: int
    trivial: int
    even_sum: int
    odd_sum: int
    total: int

    def __post_init__(self):
        if self.total != self.trivial + self.even_sum + self.odd_sum:
            raise ValueError("total does not match its summands")


def tau_triple(n: int) -> TauTriple:
    """Count the divisors of n, split by parity.

    Writes n = 2^e * m with m odd: the odd divisors are the divisors of
    m, and each gains e even multiples, so tau = (e+1)*tau(m) and
    tau_even = e*tau(m).  Avoids full factorization.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    e = 0
    m = n
    while m % 2 == 0:
        m //= 2
        e += 1
    t_odd = 0
    for d in range(1, isqrt(m) + 1):
        if m % d == 0:
            t_odd += 1 if d * d == m else 2
    return TauTriple(tau=(e + 1) * t_odd, tau_odd=t_odd, tau_even=e * t_odd)


def critical_value(n: int, d: int) -> Fraction:
    """Largest admissible difference bound 2n / (d*(d-1)) for length d.

    A divisor d of the appropriate arithmetic yields a partition with
    positive first term exactly for differences k < this value (strict).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    return Fraction(2 * n, d * (d - 1))


def count_even_below(x: Fraction | int) -> int:
    """Number of even j with 0 < j < x, for exact rational x > 0."""
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    return (math.ceil(x) - 1) // 2


def count_odd_below(x: Fraction | int) -> int:
    """Number of odd j with 0 < j < x, for exact rational x > 0."""
    if x <= 0:
        raise ValueError(f"x must be positive, got {x}")
    return math.ceil(x) // 2


def ap_count(n: int) -> CountBreakdown:
    """Count the partitions of n into a nondecreasing arithmetic progression.

    trivial: one constant partition per usual divisor of n.
    even_sum: for each divisor d of n with 1 < d and d*d <= n, the number
        of even differences k with 0 < k < 2n/(d*(d-1)).
    odd_sum: for each d dividing 2n but not both even and dividing n,
        with 1 < d and d*d < 2n, the number of odd k below the same bound.
    """
    if not 1 <= n <= MAX_COUNT_N:
        raise ValueError(f"n must be in [1, {MAX_COUNT_N}], got {n}")
    d_even = divisor_set(n, Parity.EVEN)
    d_odd = divisor_set(n, Parity.ODD)
    trivial = len(d_even)
    even_sum = sum(
        count_even_below(critical_value(n, d))
        for d in d_even
        if 1 < d and d * d <= n
    )
    odd_sum = sum(
        count_odd_below(critical_value(n, d))
        for d in d_odd
        if 1 < d and d * d < 2 * n
    )
    return CountBreakdown(
        n=n,
        trivial=trivial,
        even_sum=even_sum,
        odd_sum=odd_sum,
        total=trivial + even_sum + odd_sum,
    )


def dk_cardinality(n: int, k: int) -> int:
    """Size of the divisor set of n in the k-arithmetic.

    tau(n) for even k; twice the number of odd divisors of n for odd k
    (in which case exactly half the divisors are even).
    """
    t = tau_triple(n)
    return t.tau if k % 2 == 0 else 2 * t.tau_odd


def apdiv_count(n: int) -> int:
    """Number of distinct lengths among the AP partitions of n.

    Every usual divisor of n occurs as a length (constant partitions);
    the only other lengths are the even odd-arithmetic divisors d with
    1 < d and d*d < 2n.
    """
    if not 1 <= n <= MAX_COUNT_N:
        raise ValueError(f"n must be in [1, {MAX_COUNT_N}], got {n}")
    extra = sum(
        1
        for d in divisor_set(n, Parity.ODD)
        if d % 2 == 0 and 1 < d and d * d < 2 * n
    )
    return tau_triple(n).tau + extra
