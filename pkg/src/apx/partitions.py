"""Explicit construction of every AP partition of n.

A partition is stored canonically as (first term, common difference,
length).  Enumeration walks the eligible divisors of each parity, takes
every admissible difference below the critical value, and recovers the
first term through the exact quotient.  Output order is (difference
ascending, then length ascending), which is a repo convention and part
of the CLI contract.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

from .count import count_even_below, count_odd_below, critical_value
from .kcore import Parity, divisor_set, k_quotient

# Default refusal bound for full enumeration; the number of partitions
# grows linearly in n, so output size is the binding constraint.
MAX_ENUM_N = 10**7


@dataclass(frozen=True)
class ApPartition:
    """One partition of n with parts first, first+diff, ..., length terms."""

    n: int
    first: int
    diff: int
    length: int

    def __post_init__(self):
        if self.n < 1 or self.first < 1 or self.length < 1 or self.diff < 0:
            raise ValueError(f"invalid partition {self!r}")
        if self.length == 1 and self.diff != 0:
            raise ValueError("single-part partitions must have diff 0")
        total = self.length * self.first + self.length * (self.length - 1) // 2 * self.diff
        if total != self.n:
            raise ValueError(f"parts of {self!r} sum to {total}, not {self.n}")


def partition_for(n: int, d: int, k: int) -> ApPartition | None:
    """The AP partition of n with length d and difference k, if one exists.

    Length 1 is canonicalized: it exists only for k == 0 (the partition
    n = n), so the same part list is never produced twice.  For d >= 2
    the quotient gives the anchor; the partition is kept only when its
    first term is positive.
    """
    if n < 1 or d < 1:
        raise ValueError(f"n and d must be positive, got n={n}, d={d}")
    if k < 0:
        raise ValueError(f"difference must be nonnegative, got {k}")
    if d == 1:
        return ApPartition(n=n, first=n, diff=0, length=1) if k == 0 else None
    c = k_quotient(n, d, k)
    if c is None:
        return None
    first = c - d + 1
    if first < 1:
        return None
    return ApPartition(n=n, first=first, diff=k, length=d)


def _diff_stream(d: int, start: int, top: int) -> Iterator[tuple[int, int]]:
    for k in range(start, top + 1, 2):
        yield k, d


def _positive_diff_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All (diff, length) pairs with diff > 0, ascending by (diff, length)."""
    streams = []
    for d in divisor_set(n, Parity.EVEN):
        if 1 < d and d * d <= n:
            top = 2 * count_even_below(critical_value(n, d))
            streams.append(_diff_stream(d, 2, top))
    for d in divisor_set(n, Parity.ODD):
        if 1 < d and d * d < 2 * n:
            top = 2 * count_odd_below(critical_value(n, d)) - 1
            streams.append(_diff_stream(d, 1, top))
    return heapq.merge(*streams)


def iter_ap(n: int, max_n: int = MAX_ENUM_N) -> Iterator[ApPartition]:
    """Stream the members of AP(n) in canonical (diff, length) order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the enumeration bound {max_n}")
    for d in divisor_set(n, Parity.EVEN):
        yield ApPartition(n=n, first=n // d, diff=0, length=d)
    for k, d in _positive_diff_pairs(n):
        p = partition_for(n, d, k)
        assert p is not None, (n, d, k)
        yield p


def enumerate_ap(n: int, max_n: int = MAX_ENUM_N) -> list[ApPartition]:
    """All members of AP(n), each exactly once, in canonical order."""
    return list(iter_ap(n, max_n=max_n))


def expand(p: ApPartition, max_len: int = MAX_ENUM_N) -> list[int]:
    """The explicit part list [first, first+diff, ...] of a partition."""
    if p.length > max_len:
        raise ValueError(f"length {p.length} exceeds the expansion bound {max_len}")
    return [p.first + i * p.diff for i in range(p.length)]


def ap_lengths(n: int) -> list[int]:
    """Sorted distinct lengths occurring among the AP partitions of n.

    These are the usual divisors of n plus every even odd-arithmetic
    divisor d with 1 < d and d*d < 2n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    lengths = set(divisor_set(n, Parity.EVEN))
    lengths.update(
        d
        for d in divisor_set(n, Parity.ODD)
        if d % 2 == 0 and 1 < d and d * d < 2 * n
    )
    return sorted(lengths)
