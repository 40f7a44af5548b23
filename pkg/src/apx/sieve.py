"""Batch tables of partition counts for every n in [1, N].

Uses the compiled kernel when the extension built, otherwise the pure
Python fallback; set APX_PURE=1 to force the fallback.  Either way the
work is O(N log N) divisor-pair iteration, fast enough for the comet
plot range (10^5) and well beyond.
"""

from __future__ import annotations

import array
import os
from dataclasses import dataclass
from typing import Iterator

if os.environ.get("APX_PURE", "") in ("", "0"):
    try:
        from . import _sieve as _kernel

        BACKEND = "compiled"
    except ImportError:
        from . import _sieve_py as _kernel

        BACKEND = "pure"
else:
    from . import _sieve_py as _kernel

    BACKEND = "pure"

# Default batch guardrail; one 8-byte slot per index.
MAX_RANGE_N = 10**7


@dataclass(frozen=True)
class SequenceTable:
    """Values of one sequence for n = 1..upper; values[0] is unused."""

    kind: str  # "ap" or "apdiv"
    upper: int
    values: array.array

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.upper:
            raise IndexError(f"index {n} outside [1, {self.upper}]")
        return self.values[n]

    def rows(self) -> Iterator[tuple[int, int]]:
        for n in range(1, self.upper + 1):
            yield n, self.values[n]


def _check_range(n_max: int, max_n: int) -> None:
    if n_max < 1:
        raise ValueError(f"N must be positive, got {n_max}")
    if n_max > max_n:
        raise ValueError(f"N={n_max} exceeds the batch bound {max_n}")


def ap_count_range(n_max: int, max_n: int = MAX_RANGE_N) -> SequenceTable:
    """Table of |AP(n)| for n = 1..n_max."""
    _check_range(n_max, max_n)
    return SequenceTable(kind="ap", upper=n_max, values=_kernel.ap_count_range(n_max))


def apdiv_count_range(n_max: int, max_n: int = MAX_RANGE_N) -> SequenceTable:
    """Table of the number of distinct AP partition lengths for n = 1..n_max."""
    _check_range(n_max, max_n)
    return SequenceTable(kind="apdiv", upper=n_max, values=_kernel.apdiv_count_range(n_max))
