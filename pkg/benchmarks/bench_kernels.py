#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends.

Each workload runs in a fresh subprocess per backend (the backend is
fixed at import time by SUNCG_BACKEND).  The compiled backend is timed
after a warmup pass so JIT compilation stays out of the numbers; the
cache means later processes skip compilation entirely.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json
import sys
import time

from suncg import _kernels, algebra, clebsch, littlewood, patterns

_kernels.warmup()

def timed(func, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best

def enumerate_su5():
    patterns._table_cached.cache_clear()
    algebra._operator_matrix_cached.cache_clear()
    patterns.table((4, 3, 2, 1, 0))  # dim 1024

def ladder_su5():
    patterns._table_cached.cache_clear()
    algebra._operator_matrix_cached.cache_clear()
    for l in range(1, 5):
        algebra.operator_matrix((4, 3, 2, 1, 0), l, "lowering")

def decompose_su4():
    littlewood.decompose((4, 2, 1, 0), (2, 1, 0, 0))

def full_cgc_su3():
    clebsch.compute_all_tensors((2, 1, 0), (3, 1, 0))

repeat = int(sys.argv[1])
results = {}
for name, func in [
    ("enumerate su(5) (4,3,2,1,0)", enumerate_su5),
    ("ladder COO su(5) (4,3,2,1,0)", ladder_su5),
    ("decompose su(4) 140x20", decompose_su4),
    ("full CGC su(3) 8x15", full_cgc_su3),
]:
    func()  # warm caches that are not part of the measurement
    results[name] = timed(func, repeat)
print(json.dumps(results))
"""


def run_backend(backend: str, repeat: int) -> dict[str, float]:
    env = {**os.environ, "SUNCG_BACKEND": backend}
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats per workload")
    args = parser.parse_args()

    timings = {}
    for backend in ("numba", "python"):
        try:
            timings[backend] = run_backend(backend, args.repeat)
        except subprocess.CalledProcessError as exc:
            print(f"{backend} backend failed:\n{exc.stderr}", file=sys.stderr)
            if backend == "python":
                return 1
            timings[backend] = None

    names = list(timings["python"])
    width = max(len(n) for n in names)
    header = f"{'workload':<{width}}  {'numba':>10}  {'python':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name in names:
        py = timings["python"][name]
        nb = timings["numba"][name] if timings["numba"] else float("nan")
        speedup = py / nb if nb and nb > 0 else float("nan")
        print(f"{name:<{width}}  {nb * 1e3:>8.2f}ms  {py * 1e3:>8.2f}ms  {speedup:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
