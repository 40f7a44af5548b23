"""Counting and enumeration of integer partitions into arithmetic progressions.

AP(n) is the set of partitions of n whose nondecreasing parts form an
arithmetic progression.  The package computes |AP(n)| in closed form
from divisor sets of generalized arithmetics, enumerates the partitions
explicitly, sieves whole ranges, and cross-checks everything against a
brute-force oracle and OEIS b-files (A049988, A175239).
"""

from .count import (
    MAX_COUNT_N,
    CountBreakdown,
    TauTriple,
    ap_count,
    apdiv_count,
    count_even_below,
    count_odd_below,
    critical_value,
    dk_cardinality,
    tau_triple,
)
from .kcore import (
    DivisorSet,
    Parity,
    divisor_set,
    k_divides,
    k_product,
    k_quotient,
    usual_divisors,
)
from .oracle import MAX_ORACLE_N, brute_count, brute_enumerate
from .partitions import (
    MAX_ENUM_N,
    ApPartition,
    ap_lengths,
    enumerate_ap,
    expand,
    iter_ap,
    partition_for,
)
from .sieve import MAX_RANGE_N, SequenceTable, ap_count_range, apdiv_count_range

__version__ = "0.1.0"

__all__ = [
    "ApPartition",
    "CountBreakdown",
    "DivisorSet",
    "MAX_COUNT_N",
    "MAX_ENUM_N",
    "MAX_ORACLE_N",
    "MAX_RANGE_N",
    "Parity",
    "SequenceTable",
    "TauTriple",
    "ap_count",
    "ap_count_range",
    "ap_lengths",
    "apdiv_count",
    "apdiv_count_range",
    "brute_count",
    "brute_enumerate",
    "count_even_below",
    "count_odd_below",
    "critical_value",
    "divisor_set",
    "dk_cardinality",
    "enumerate_ap",
    "expand",
    "iter_ap",
    "k_divides",
    "k_product",
    "k_quotient",
    "partition_for",
    "tau_triple",
    "usual_divisors",
    "__version__",
]
