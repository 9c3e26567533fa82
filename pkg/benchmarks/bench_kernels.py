"""Benchmark the pure-Python enumeration kernels against the compiled ones.

Usage:
    python benchmarks/bench_kernels.py [--repeat N]

Covers the three kernel entry points on the sizes the verification suite
actually hits.  The compiled backend is optional; if it is missing only the
pure numbers are printed.
"""

import argparse
import time

from catpark import _purecore

try:
    from catpark import _fastcore
except ImportError:
    _fastcore = None

CASES = [
    ("iter_bounded m=3 n=7",
     lambda mod: sum(1 for _ in mod.iter_bounded([3 * i - 2 for i in range(1, 8)]))),
    ("iter_bounded m=4 n=7",
     lambda mod: sum(1 for _ in mod.iter_bounded([4 * i - 3 for i in range(1, 8)]))),
    ("luck_histogram m=2 n=8", lambda mod: mod.luck_histogram(2, 8)),
    ("luck_histogram m=3 n=8", lambda mod: mod.luck_histogram(3, 8)),
    ("stat_quad_histogram m=2 n=7", lambda mod: mod.stat_quad_histogram(2, 7)),
    ("stat_quad_histogram m=3 n=6", lambda mod: mod.stat_quad_histogram(3, 6)),
]


def best_of(fn, mod, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(mod)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if _fastcore is None:
        print("compiled backend not built (pip install -e . --no-build-isolation)")
    header = f"{'case':34s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, fn in CASES:
        pure_t, pure_r = best_of(fn, _purecore, args.repeat)
        if _fastcore is None:
            print(f"{name:34s} {pure_t * 1000:9.1f}ms {'-':>10s} {'-':>8s}")
            continue
        fast_t, fast_r = best_of(fn, _fastcore, args.repeat)
        assert pure_r == fast_r, f"backend mismatch on {name}"
        print(f"{name:34s} {pure_t * 1000:9.1f}ms {fast_t * 1000:9.1f}ms "
              f"{pure_t / fast_t:7.1f}x")


if __name__ == "__main__":
    main()
