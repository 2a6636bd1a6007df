"""Time the numba and numpy kernel backends on the same tables.

    python3 benchmarks/bench_kernels.py --n 14 16 18 --repeat 3
"""

import argparse
import time

import numpy as np

from matroid_dd import kernels
from matroid_dd._backend import HAVE_NUMBA
from matroid_dd.generators import random_matroid


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads(n, seed):
    M = random_matroid("laminar", n, seed)
    ind = np.ascontiguousarray(M.independence_table())
    r = kernels.rank_table(ind).astype(np.int64)
    full = ind.shape[0] - 1
    lam = (r + r[full ^ np.arange(full + 1)] - r[full]).astype(np.int8)
    half = n // 2
    basis = kernels.greedy_basis_table(ind, half)
    return {
        "rank_table": lambda: kernels.rank_table(ind),
        "greedy_basis_table": lambda: kernels.greedy_basis_table(ind, half),
        "minor_rows": lambda: kernels.minor_rows(ind, basis, half),
        "pathwidth_table": lambda: kernels.pathwidth_table(lam),
        "constraint_table": lambda: kernels.constraint_table(n, [(1 << half) - 1, full], [1, n // 3]),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[12, 14, 16, 18])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    prev = kernels.get_backend()
    print(f"{'kernel':<20} {'n':>3} " + " ".join(f"{b + ' (s)':>12}" for b in backends) + "   speedup")
    try:
        for n in args.n:
            for name in workloads(n, args.seed):
                times = []
                for b in backends:
                    kernels.set_backend(b)
                    fn = workloads(n, args.seed)[name]
                    fn()  # warm-up, includes numba compilation
                    times.append(best_of(fn, args.repeat))
                speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 and times[1] > 0 else ""
                print(f"{name:<20} {n:>3} " + " ".join(f"{t:12.5f}" for t in times) + "   " + speed)
    finally:
        kernels.set_backend(prev)


if __name__ == "__main__":
    main()
