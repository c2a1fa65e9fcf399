#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure fallback.

Micro-kernels run in-process through both backends; the end-to-end solver row
re-executes this interpreter with GEOSWAP_PURE toggled so each side selects its
backend at import, exactly as users get it.

Usage: python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import subprocess
import sys
import time

from geoswap import kernels
from geoswap.rng import SplitMix64

END_TO_END = r"""
import time
from geoswap import SearchConfig, local_search, exact_optimum, backend_name
from geoswap.harness import bench
from geoswap.rng import derive

t0 = time.perf_counter()
for i in range(40):
    inst = bench.generate("shallow", {"n": 11, "l": 2, "area": 6.0},
                          derive(99, i))
    problem, _ = bench.build_problem("shallow", inst)
    sol = local_search(problem, SearchConfig(k=problem.ground_size))
    opt = exact_optimum(problem, size_cap=12)
    assert len(sol.selected) == opt.value
print(f"{backend_name()}\t{time.perf_counter() - t0:.3f}")
"""


def timeit(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return time.perf_counter() - t0


def bench_depth_table(reps):
    rng = SplitMix64(1)
    rows = [rng.next_u64() & 0xFFF for _ in range(150)]
    masks = [rng.next_u64() & 0xFFF for _ in range(64)]
    out = {}
    for backend in available():
        table = kernels.DepthTable(rows, 12, backend=backend)
        out[backend] = timeit(lambda: [table.max_depth(m) for m in masks], reps)
    return "DepthTable.max_depth (150 rows x 64 masks)", reps, out


def bench_cover_table(reps):
    rng = SplitMix64(2)
    rows = [rng.next_u64() & ((1 << 30) - 1) for _ in range(12)]
    masks = [rng.next_u64() & 0xFFF for _ in range(64)]
    out = {}
    for backend in available():
        table = kernels.CoverTable(rows, 30, backend=backend)
        out[backend] = timeit(lambda: [table.covers_all(m) for m in masks], reps)
    return "CoverTable.covers_all (12 objs x 64 masks)", reps, out


def bench_grid(reps):
    rng = SplitMix64(3)
    n = 15
    cx = [rng.uniform(0, 5) for _ in range(n)]
    cy = [rng.uniform(0, 5) for _ in range(n)]
    rr = [rng.uniform(0.4, 1.5) for _ in range(n)]
    out = {}
    for backend in available():
        out[backend] = timeit(
            lambda: kernels.grid_depth(cx, cy, rr, -2, -2, 9.0 / 1000, 1001,
                                       1001, False, 1e-9, backend=backend),
            reps)
    return "grid_depth (1001x1001 x 15 disks)", reps, out


def available():
    names = ["pure"]
    if kernels._ckernels is not None:
        names.insert(0, "compiled")
    return names


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    reps = (200, 2000, 2) if not args.quick else (20, 200, 1)

    print(f"default backend: {kernels.backend_name()}\n")
    rows = [bench_depth_table(reps[0]), bench_cover_table(reps[1]),
            bench_grid(reps[2])]
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  reps  " +
          "  ".join(f"{b:>10}" for b in available()) + "   speedup")
    for name, n, res in rows:
        cols = "  ".join(f"{res[b]:>9.4f}s" for b in available())
        speed = (f"{res['pure'] / res['compiled']:.1f}x"
                 if "compiled" in res else "n/a")
        print(f"{name:<{width}}  {n:>4}  {cols}   {speed}")

    print("\nend-to-end: 40 shallow-set instances, full-budget search + oracle")
    for pure in ("0", "1"):
        env = dict(os.environ, GEOSWAP_PURE=pure)
        res = subprocess.run([sys.executable, "-c", END_TO_END], env=env,
                             capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        print(f"  {backend:>9}: {float(secs):.3f}s")


if __name__ == "__main__":
    main()
