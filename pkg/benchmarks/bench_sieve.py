#!/usr/bin/env python3
"""Benchmark the compiled sieve kernel against the pure-Python fallback.

Usage: python3 benchmarks/bench_sieve.py [N ...]
Defaults to N = 10^4, 10^5, 10^6.  Each kernel is timed on both tables
(counts and lengths); outputs are compared for equality first.
"""

import sys
import time

import apx._sieve_py as pure

try:
    import apx._sieve as compiled
except ImportError:
    compiled = None


def best_of(fn, n_max, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(n_max)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    sizes = [int(arg) for arg in sys.argv[1:]] or [10**4, 10**5, 10**6]
    if compiled is None:
        print("compiled kernel not built; timing the pure fallback only")

    print(f"{'N':>9} {'table':>6} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n_max in sizes:
        repeats = 3 if n_max <= 10**5 else 1
        for name, pure_fn, comp_fn in (
            ("ap", pure.ap_count_range, compiled and compiled.ap_count_range),
            ("apdiv", pure.apdiv_count_range, compiled and compiled.apdiv_count_range),
        ):
            if comp_fn is not None and pure_fn(min(n_max, 20000)) != comp_fn(min(n_max, 20000)):
                raise AssertionError(f"kernels disagree on {name} table")
            t_pure = best_of(pure_fn, n_max, repeats)
            if comp_fn is None:
                print(f"{n_max:>9} {name:>6} {t_pure:>10.3f} {'n/a':>13} {'n/a':>8}")
            else:
                t_comp = best_of(comp_fn, n_max, repeats)
                print(
                    f"{n_max:>9} {name:>6} {t_pure:>10.3f} {t_comp:>13.3f} "
                    f"{t_pure / t_comp:>7.1f}x"
                )


if __name__ == "__main__":
    main()
