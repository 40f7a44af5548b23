"""Exact integer algebra for sums of arithmetic progressions.

For a fixed integer difference k, the product ``k_product(m, n, k)`` is the
sum of the n-term arithmetic progression with difference k ending so that
its terms are m-n+1, m-n+1+k, ..., m-n+1+(n-1)k.  With k = 2 this is the
ordinary product m*n.  A positive d "divides" a in this arithmetic when a
is such a sum with exactly d terms; the quotient recovers the anchor m.

Everything here is pure integer arithmetic (Python ints, so exact at any
magnitude); divisibility tests use scaled congruences, never floats.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt


class Parity(enum.Enum):
    """Parity class of the common difference k."""

    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, k: int) -> "Parity":
        return cls.EVEN if k % 2 == 0 else cls.ODD


@dataclass(frozen=True)
class DivisorSet:
    """Divisors of n in every arithmetic whose difference has this parity.

    For even k these are the usual divisors of n.  For odd k they are the
    usual divisors of 2n except the even usual divisors of n.
    """

    n: int
    parity: Parity
    divisors: tuple[int, ...]

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self) -> int:
        return len(self.divisors)

    def __contains__(self, d: object) -> bool:
        return d in self.divisors


def k_product(m: int, n: int, k: int) -> int:
    """Sum of the n-term progression (m-n+1), (m-n+1+k), ..., exactly.

    Defined for all integer m, n, k by (m-n+1)*n + n*(n-1)*k/2; the
    division is exact because n*(n-1) is always even.
    """
    return (m - n + 1) * n + n * (n - 1) // 2 * k


def k_quotient(a: int, b: int, k: int) -> int | None:
    """Quotient c with k_product(c, b, k) == a, or None if none exists.

    Algebraically c = a/b + (b-1)*(1 - k/2).  To stay in integers we test
    the scaled form: with t = 2a + b*(b-1)*(2-k), c exists iff 2b divides
    t, and then c = t // (2b).
    """
    if b == 0:
        raise ZeroDivisionError("quotient by zero in k-arithmetic")
    t = 2 * a + b * (b - 1) * (2 - k)
    if t % (2 * b):
        return None
    return t // (2 * b)


def k_divides(d: int, a: int, k: int) -> bool:
    """True iff a is the sum of exactly d terms of an integer progression
    with difference k (terms may be negative; d must be positive)."""
    if d < 1:
        raise ValueError(f"divisor must be positive, got {d}")
    return k_quotient(a, d, k) is not None


def usual_divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending, by trial division to sqrt(n)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    large.reverse()
    return small + large


def divisor_set(n: int, parity: Parity) -> DivisorSet:
    """Divisor set of n for differences of the given parity.

    EVEN: the usual divisors of n.  ODD: the usual divisors of 2n minus
    the even usual divisors of n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if parity is Parity.EVEN:
        divs = usual_divisors(n)
    else:
        divs = [d for d in usual_divisors(2 * n) if d % 2 or n % d]
    return DivisorSet(n=n, parity=parity, divisors=tuple(divs))
