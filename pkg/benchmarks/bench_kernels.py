#!/usr/bin/env python3
"""Benchmark the reduced transfer-matrix construction kernel: numba vs numpy.

The kernel sweeps all 4^m (inlet, outlet) pairs, so widths past ~10 are
where the backends separate.  The numba timing excludes the one-off JIT
compilation (a warmup call precedes the timed runs).

    python benchmarks/bench_kernels.py --widths 6 8 10 12 --repeat 3
"""

import argparse
import time

import numpy as np

from gridcycles import _kernels as kernels


def time_backend(fn, m: int, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(m)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--widths", type=int, nargs="+", default=[6, 8, 10, 12])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("numpy", kernels._reduced_adjacency_numpy)]
    if kernels.HAVE_NUMBA:
        kernels._reduced_adjacency_numba(4)  # JIT warmup
        backends.append(("numba", kernels._reduced_adjacency_numba))
    else:
        print("numba not importable; benchmarking the numpy fallback only")

    check = min(args.widths)
    results = [fn(check) for _, fn in backends]
    assert all(np.array_equal(results[0], r) for r in results), "backends disagree"

    print(f"{'m':>4} {'matrix':>12}", *(f"{name:>12}" for name, _ in backends))
    for m in args.widths:
        times = [time_backend(fn, m, args.repeat) for _, fn in backends]
        cells = " ".join(f"{t * 1e3:>11.1f}ms" for t in times)
        print(f"{m:>4} {2**m:>6}x{2**m:<6} {cells}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
