"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

The numba column is skipped when numba is unavailable or disabled with
CYLROMAN_NO_NUMBA=1 (the *_loops functions would then run as plain Python).
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from cylroman import kernels
from cylroman._accel import USE_NUMBA
from cylroman.exact import _Tables
from cylroman.grid import CylinderGrid


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def cases():
    g = CylinderGrid(8, 6)
    batch = np.random.default_rng(0).integers(0, 4, size=(20000, g.order)).astype(np.int64)
    yield "vertex_ok 20000x(8x6) k=2", (
        lambda: kernels.vertex_ok_loops(batch, g.neighbor_table, 2),
        lambda: kernels.vertex_ok_numpy(batch, g.neighbor_table, 2),
    )
    b = CylinderGrid(5, 2)
    yield "brute_min 4^10 (5x2) k=2", (
        lambda: kernels.brute_min_loops(b.order, b.neighbor_table, 2, 4),
        lambda: kernels.brute_min_numpy(b.order, b.neighbor_table, 2, 4),
    )
    for m, k in ((5, 2), (5, 3)):
        t = _Tables(m, k, tuple(range(k + 2)))
        table = np.random.default_rng(1).integers(0, 99, size=(t.X, t.H)).astype(np.int32)
        upper = kernels.superset_min_numpy(table, t.pw, k)
        yield f"superset_min m={m} k={k}", (
            lambda t=t, table=table, k=k: kernels.superset_min_loops(table, t.pw, k),
            lambda t=t, table=table, k=k: kernels.superset_min_numpy(table, t.pw, k),
        )
        yield f"dp_step m={m} k={k}", (
            lambda t=t, u=upper, k=k: kernels.dp_step_loops(u, t.inner, t.g, t.gcode, t.weight, t.pw, k),
            lambda t=t, u=upper, k=k: kernels.dp_step_numpy(u, t.inner, t.g, t.gcode, t.weight, t.pw, k),
        )


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':32s} {'numba [s]':>10s} {'numpy [s]':>10s} {'speedup':>8s}")
    for name, (fast, slow) in cases():
        if USE_NUMBA:
            fast()  # compile outside the timing
            tf = best_of(fast, args.repeat)
        tn = best_of(slow, args.repeat)
        if USE_NUMBA:
            print(f"{name:32s} {tf:10.4f} {tn:10.4f} {tn / tf:8.1f}")
        else:
            print(f"{name:32s} {'-':>10s} {tn:10.4f} {'-':>8s}")


if __name__ == "__main__":
    main()
