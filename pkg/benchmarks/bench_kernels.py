#!/usr/bin/env python3
"""Compare the numba and numpy sampling backends on a realistic workload.

The workload is the hot path of a family sweep: curvature profiles at 2001
parameters plus cumulative arc length at 200 parameters, for every member of
the long-spiral regression family.

Usage:  python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import math
import time

import numpy as np

from spiralinv import G2Point, prepare
from spiralinv.family import family_sweep
from spiralinv.kernels import BACKEND, _numba, _numpy


def workload_curves():
    prob = prepare(G2Point(-1, 0, math.radians(-150.0), -0.4),
                   G2Point(1, 0, math.radians(-120.0), 0.3))
    sols, _ = family_sweep(prob)
    return [(np.asarray(s.quartic.x_num), np.asarray(s.quartic.y_num),
             np.asarray(s.quartic.den)) for s in sols]


def run(impl, curves, ts_audit, ts_plot):
    acc = 0.0
    for xn, yn, dn in curves:
        _, _, _, _, k = impl.rational_frame(xn, yn, dn, ts_audit)
        s = impl.arc_length_cumulative(xn, yn, dn, ts_plot)
        acc += float(k[-1]) + float(s[-1])
    return acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    curves = workload_curves()
    ts_audit = np.linspace(0.0, 1.0, 2001)
    ts_plot = np.linspace(0.0, 1.0, 200)

    impls = [("numba", _numba), ("numpy", _numpy)]
    print(f"dispatcher default backend: {BACKEND}")
    print(f"workload: {len(curves)} quartics x (2001-sample curvature "
          f"+ 200-sample arc length)\n")
    results = {}
    for name, impl in impls:
        run(impl, curves, ts_audit, ts_plot)  # warm (JIT compile for numba)
        best = math.inf
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            check = run(impl, curves, ts_audit, ts_plot)
            best = min(best, time.perf_counter() - t0)
        results[name] = (best, check)
        print(f"{name:6s}  best of {args.repeat}: {best * 1e3:8.2f} ms "
              f"(checksum {check:.12g})")
    ratio = results["numpy"][0] / results["numba"][0]
    drift = abs(results["numpy"][1] - results["numba"][1])
    print(f"\nspeedup numba over numpy: {ratio:.2f}x  "
          f"(checksum drift {drift:.2e})")


if __name__ == "__main__":
    main()
