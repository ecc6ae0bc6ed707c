#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot kernels on synthetic inputs: the min-plus matrix
product on square matrices, and the bideterminant permutation scan.
Median of --reps timed runs, after one untimed warm-up (which also
absorbs JIT compilation).

Usage:
    python benchmarks/bench_backends.py [--reps 5] [--full]
"""

import argparse
import math
import statistics
import time

import numpy as np

from minplus import _kernels_numpy

try:
    from minplus import _kernels_numba
except ImportError:
    _kernels_numba = None

MATMUL_SIZES = [40, 100, 200]
BIDET_SIZES = [7, 8, 9]


def random_pair(rng, m, n, eps_prob=0.15):
    values = rng.integers(-100, 101, size=(m, n)).astype(np.int64)
    finite = rng.random((m, n)) >= eps_prob
    values[~finite] = 0
    return values, finite


def median_time(fn, args, reps):
    fn(*args)  # warm-up
    samples = []
    for _ in range(reps):
        start = time.perf_counter()
        fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def run_case(label, kernel_name, args, reps):
    t_numpy = median_time(getattr(_kernels_numpy, kernel_name), args, reps)
    if _kernels_numba is None:
        print(f"{label:32s}  numpy {t_numpy * 1e3:9.3f} ms   numba unavailable")
        return
    t_numba = median_time(getattr(_kernels_numba, kernel_name), args, reps)
    speedup = t_numpy / t_numba if t_numba > 0 else float("inf")
    print(
        f"{label:32s}  numpy {t_numpy * 1e3:9.3f} ms   "
        f"numba {t_numba * 1e3:9.3f} ms   x{speedup:6.1f}"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--reps", type=int, default=5, help="timed repetitions (default 5)")
    parser.add_argument(
        "--full", action="store_true", help="also run the n=10 bideterminant (3.6M terms)"
    )
    args = parser.parse_args()

    rng = np.random.default_rng(12345)
    print(f"reps per case: {args.reps}  (median reported)")
    print()

    for n in MATMUL_SIZES:
        av, am = random_pair(rng, n, n)
        bv, bm = random_pair(rng, n, n)
        run_case(f"matmul {n}x{n}", "matmul", (av, am, bv, bm), args.reps)

    for n in BIDET_SIZES + ([10] if args.full else []):
        av, am = random_pair(rng, n, n)
        label = f"bidet scan n={n} ({math.factorial(n):,} terms)"
        run_case(label, "bidet_scan", (av, am), args.reps)


if __name__ == "__main__":
    main()
