#!/usr/bin/env python3
"""Generate the vendored OEIS b-file fixtures by exhaustive enumeration.

The build environment has no route to oeis.org, so the fixtures under
tests/data/ are produced here instead: for every length d and first term
a1 we walk the differences k = 0, 1, 2, ... while the progression sum
d*a1 + d*(d-1)/2*k stays within range, tallying counts and length
presence per sum.  This sweep deliberately shares nothing with the
divisor-based formula or sieve the fixtures are later checked against;
it is the same derivation the per-n oracle uses, vectorized over n.

Every run cross-checks a prefix against apx.oracle and the frozen first
twenty terms of both sequences before writing anything.

Usage: python3 tools/gen_bfile_fixtures.py [N]
"""

import sys
from math import isqrt
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from apx.oracle import brute_enumerate  # noqa: E402

AP_FIRST_20 = [1, 2, 3, 4, 4, 7, 5, 7, 9, 9, 7, 14, 8, 11, 16, 13, 10, 20, 11, 17]
APDIV_FIRST_20 = [1, 2, 3, 3, 3, 4, 3, 4, 4, 5, 3, 6, 3, 5, 5, 5, 3, 7, 3, 6]


def sweep(n_max):
    """counts[n] = #AP partitions of n, lengths[n] = #distinct lengths."""
    counts = np.zeros(n_max + 1, dtype=np.int64)
    # a nontrivial (k >= 1) partition of length d needs d*(d+1)/2 <= n,
    # so only lengths below `width` ever need a presence column; longer
    # lengths occur as constant partitions only and are tallied apart
    width = isqrt(2 * n_max) + 1
    present = np.zeros((n_max + 1, width), dtype=bool)
    long_trivial = np.zeros(n_max + 1, dtype=np.int64)

    counts[1:] += 1  # d = 1: the single-part partition of every n
    present[1:, 1] = True
    for d in range(2, n_max + 1):
        half = d * (d - 1) // 2
        for a1 in range(1, n_max // d + 1):
            base = d * a1
            if d < width:
                counts[base::half] += 1
                present[base::half, d] = True
            else:
                # half > n_max here, so only k = 0 fits
                counts[base] += 1
                long_trivial[base] += 1

    lengths = present.sum(axis=1) + long_trivial
    return counts, lengths


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    counts, lengths = sweep(n_max)

    assert list(counts[1:21]) == AP_FIRST_20, "AP prefix disagrees with known terms"
    assert list(lengths[1:21]) == APDIV_FIRST_20, "APdiv prefix disagrees with known terms"
    for n in range(1, min(n_max, 400) + 1):
        parts = brute_enumerate(n)
        assert counts[n] == len(parts), f"count mismatch vs oracle at n={n}"
        assert lengths[n] == len({len(p) for p in parts}), f"length mismatch at n={n}"
    print(f"cross-checks passed (oracle prefix + frozen first 20 terms), N={n_max}")

    data_dir = Path(__file__).resolve().parents[1] / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)
    targets = [
        ("b049988.txt", "A049988", "number of arithmetic-progression partitions of n", counts),
        ("b175239.txt", "A175239", "number of distinct AP partition lengths of n", lengths),
    ]
    for name, aid, title, values in targets:
        path = data_dir / name
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(f"# {aid}: {title}.\n")
            fh.write(f"# Terms 1..{n_max}, generated by tools/gen_bfile_fixtures.py"
                     " (exhaustive enumeration).\n")
            for n in range(1, n_max + 1):
                fh.write(f"{n} {values[n]}\n")
        print(f"wrote {path} ({n_max} terms)")


if __name__ == "__main__":
    main()
