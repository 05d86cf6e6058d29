"""Benchmark the compiled composition kernel against the pure-Python one.

The composition kernel dominates two real workloads: the brute-force
completeness oracle for the equation solvers (millions of candidate
compositions) and the randomized algebraic-law audits.  Run:

    python benchmarks/bench_kernels.py [--n 200000]
"""

import argparse
import random
import time

from cofinj import _pykernel
from cofinj.core import random_element

try:
    from cofinj import _ckernel
except ImportError:
    _ckernel = None


def bench(fn, pairs, n):
    t0 = time.perf_counter()
    i = 0
    while i < n:
        for a, b in pairs:
            fn(a, b)
        i += len(pairs)
    dt = time.perf_counter() - t0
    return dt / n * 1e9


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200_000, help="compositions per kernel per workload")
    args = ap.parse_args()

    rng = random.Random(0)
    small = [
        (random_element(rng, 2, 2).segments, random_element(rng, 2, 2).segments)
        for _ in range(200)
    ]
    wide = [
        (random_element(rng, 6, 4).segments, random_element(rng, 6, 4).segments)
        for _ in range(200)
    ]

    for label, pairs in [("small (<=2 gaps)", small), ("wide (<=6 gaps)", wide)]:
        ns_pure = bench(_pykernel.compose_segments, pairs, args.n)
        print(f"{label:18s} pure: {ns_pure:9.1f} ns/op")
        if _ckernel is not None:
            ns_c = bench(_ckernel.compose_segments, pairs, args.n)
            print(f"{label:18s} c:    {ns_c:9.1f} ns/op   ({ns_pure / ns_c:.1f}x)")
        else:
            print(f"{label:18s} c:    not built")


if __name__ == "__main__":
    main()
