#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the numpy fallback.

Times the three hot paths behind the sweeps (word enumeration, per-level
coverage extremes, branch-and-prune point evaluation) on both backends.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from locdim import _pykernels, kernels


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if kernels.BACKEND != "compiled":
        print("compiled backend not available; nothing to compare")
        return

    rho, digits, probs = 0.8, np.array([0.0, 0.2]), np.array([0.5, 0.5])
    digits3 = np.array([0.0, 0.1, 0.2])
    probs3 = np.array([0.25, 0.5, 0.25])
    rng = np.random.default_rng(0)
    xs = rng.uniform(0, 1, 2000)

    cases = [
        (
            "word_offsets      m=1 n=18",
            lambda k: k.word_offsets(rho, digits, probs, 18),
        ),
        (
            "word_offsets      m=2 n=12",
            lambda k: k.word_offsets(rho, digits3, probs3, 12),
        ),
        (
            "coverage_sup      n_max=14",
            lambda k: k.coverage_sup_levels(rho, digits, probs, 14),
        ),
        (
            "coverage_min      n_max=14",
            lambda k: k.coverage_min_levels(rho, digits, probs, 0.3, 0.7, 14),
        ),
        (
            "pointwise x2000   n=16",
            lambda k: [k.pointwise_weight(rho, digits, probs, x, 16, 0.0, 1.0) for x in xs],
        ),
        (
            "table sweep step  (sup levels at 500 rho)",
            lambda k: [
                k.coverage_sup_levels(r, digits, probs, 10)
                for r in np.linspace(0.5, 0.85, 500)
            ],
        ),
    ]

    print(f"{'case':<44}{'compiled':>12}{'python':>12}{'speedup':>10}")
    for name, fn in cases:
        t_c = timeit(lambda: fn(kernels), args.repeat)
        t_p = timeit(lambda: fn(_pykernels), args.repeat)
        print(f"{name:<44}{t_c * 1e3:>10.2f}ms{t_p * 1e3:>10.2f}ms{t_p / t_c:>9.2f}x")


if __name__ == "__main__":
    main()
