"""Time the compiled accumulation kernels against the NumPy fallback.

The strong-mean ladder is the package hot spot: for degrees (n, m) it
touches (n+1)(m+1) partial sums on every grid node. This script feeds both
backends the same prepared arrays, reports best-of-N wall times, and
cross-checks that the outputs agree to rounding. Single-threaded on both
sides; the compiled win comes from loop fusion, not parallelism.

Usage:
    python3 benchmarks/bench_backends.py
    python3 benchmarks/bench_backends.py --grid 256 --degrees 8,16,32 --repeats 5
"""

import argparse
import sys
import time

import numpy as np

from torussum import (
    coefficients,
    exp_tables,
    harmonic_values,
    make_grid,
    random_trig_polynomial,
    sample,
    trig_evaluator,
)
from torussum import _accel_py

try:
    from torussum import _accel
except ImportError:
    _accel = None


def _best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _prepare(grid_n, degree, seed):
    """Same array layout the strong-mean driver hands to the backend."""
    g = make_grid(grid_n, grid_n)
    box = random_trig_polynomial(np.random.default_rng(seed), degree, degree)
    fld = sample(trig_evaluator(box), g)
    spec = coefficients(fld, degree, degree)
    ex, ey = exp_tables(g, degree, degree)
    ell = harmonic_values(degree)
    w = 1.0 / ((degree - np.arange(degree + 1) + 1.0) * ell[degree])
    center = np.ascontiguousarray(fld.values, dtype=np.complex128).copy()
    coeffs = np.ascontiguousarray(spec.coeffs, dtype=np.complex128).copy()
    return coeffs, ex.copy(), ey.copy(), w, w.copy(), center


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", type=int, default=256, help="nodes per axis (default 256)")
    ap.add_argument("--degrees", default="8,16,32,64",
                    help="comma-separated ladder degrees (default 8,16,32,64)")
    ap.add_argument("--repeats", type=int, default=3, help="best-of repeats (default 3)")
    args = ap.parse_args(argv)
    degrees = [int(s) for s in args.degrees.split(",") if s.strip()]

    if _accel is None:
        print("compiled extension not importable; timing the NumPy fallback only")
    impls = [("python", _accel_py)] + ([("cython", _accel)] if _accel else [])

    print(f"grid {args.grid}x{args.grid}, best of {args.repeats}")
    header = f"{'op':<22}{'n':>4}" + "".join(f"{name:>12}" for name, _ in impls)
    if _accel:
        header += f"{'speedup':>10}{'max|diff|':>12}"
    print(header)

    for degree in degrees:
        if 2 * degree >= args.grid:
            print(f"{'(skipped)':<22}{degree:>4}  degree too deep for this grid")
            continue
        arrays = _prepare(args.grid, degree, seed=1729 + degree)
        ops = [("strong_mean_sum", lambda impl, a=arrays: impl.strong_mean_sum(*a))]
        table_bytes = (degree + 1) ** 2 * args.grid**2 * 8
        table_fits = table_bytes <= 200 * 2**20
        if table_fits:
            ops.append(("abs_partial_sum_table",
                        lambda impl, a=arrays: impl.abs_partial_sum_table(a[0], a[1], a[2], a[5])))
        for op, call in ops:
            times = [_best_of(args.repeats, lambda impl=impl: call(impl))
                     for _, impl in impls]
            row = f"{op:<22}{degree:>4}" + "".join(f"{t:>11.4f}s" for t in times)
            if _accel:
                diff = float(np.max(np.abs(call(_accel) - call(_accel_py))))
                row += f"{times[0] / times[1]:>9.1f}x{diff:>12.2e}"
            print(row)
        if not table_fits:
            print(f"{'abs_partial_sum_table':<22}{degree:>4}  skipped, "
                  f"table would take {table_bytes / 2**20:.0f} MiB")
    return 0


if __name__ == "__main__":
    sys.exit(main())
