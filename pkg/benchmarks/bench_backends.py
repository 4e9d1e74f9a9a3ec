#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the hot path (per-subset base tables over all 2^n subsets) on a
mix of structured and random graphs, then a full 19-parameter table as
an end-to-end figure.  The numba numbers exclude JIT warmup.

    python benchmarks/bench_backends.py --sizes 10,12,14,16 --repeats 5
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

import numpy as np

from splitdom._kernels import numba_backend, numpy_backend
from splitdom.graph import from_edge_list
from splitdom.solvers import compute_table


def random_connected(n: int, seed: int):
    rng = random.Random(seed)
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n)
            if rng.random() < 0.35
        ]
        g = from_edge_list(n, edges, f"rand{n}")
        from splitdom.graph import is_connected

        if is_connected(g):
            return g


def time_call(fn, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="10,12,14,16",
                        help="comma-separated vertex counts")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    # JIT warmup so the numba column measures steady-state throughput
    warm = random_connected(6, 0)
    numba_backend.subset_tables(warm.n, np.array(warm.adj, dtype=np.uint32))

    print(f"{'n':>4} {'subsets':>8} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>8}")
    for n in sizes:
        g = random_connected(n, seed=n)
        adj = np.array(g.adj, dtype=np.uint32)
        t_np = time_call(lambda: numpy_backend.subset_tables(n, adj), args.repeats)
        t_nb = time_call(lambda: numba_backend.subset_tables(n, adj), args.repeats)
        print(f"{n:>4} {1 << n:>8} {t_np * 1e3:>12.2f} {t_nb * 1e3:>12.2f} "
              f"{t_np / t_nb:>8.2f}x")

    g = random_connected(max(sizes), seed=99)
    t_table = time_call(lambda: compute_table(g), max(2, args.repeats // 2))
    print(f"\nfull 19-parameter table at n={g.n} "
          f"({'numba' if _numba_active() else 'numpy'} backend): "
          f"{t_table * 1e3:.1f} ms")
    print("set SPLITDOM_BACKEND=numpy or numba to pin the dispatched backend")


def _numba_active() -> bool:
    from splitdom._kernels import active_backend

    return active_backend() == "numba"


if __name__ == "__main__":
    main()
