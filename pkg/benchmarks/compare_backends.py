"""Time the numba kernels against the pure-numpy fallback.

Covers the two hot paths: term summation for the series engine and
integrand evaluation inside the tanh-sinh driver. The exact rational
engine has no kernel to compare; it is pure Python by construction.

Run:  python benchmarks/compare_backends.py [--repeat N]
"""

import argparse
import math
import statistics
import time

from logsine import QuadConfig, SeriesConfig, sls_integral, zeta_cb_series
from logsine.backends import get_kernels
from logsine.series import eta_cb_series


def time_call(fn, repeat):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


CASES = [
    (
        "zeta_cb_sum z=0.94 s=2",
        lambda k: k.zeta_cb_sum(0.94, 2.0, 0.0, 1e-15, 2_000_000),
    ),
    (
        "zeta_cb_sum z=0.94 s=2+3i",
        lambda k: k.zeta_cb_sum(0.94, 2.0, 3.0, 1e-15, 2_000_000),
    ),
    (
        "eta_cb_sum z=0.94 s=-4",
        lambda k: k.eta_cb_sum(0.94, -4.0, 0.0, 1e-15, 2_000_000),
    ),
    (
        "polylog_circle k=2 M=200000",
        lambda k: k.polylog_circle(2, 0.7, 200_000),
    ),
    (
        "mzv_partial a=2 M=100000",
        lambda k: k.mzv_partial(2, 100_000),
    ),
]

API_CASES = [
    (
        "zeta_cb_series z=0.94",
        lambda: zeta_cb_series(2.0, 0.94, SeriesConfig(z_cap=0.95, tail_tolerance=1e-15)),
    ),
    (
        "eta_cb_series z=0.94",
        lambda: eta_cb_series(-4.0, 0.94, SeriesConfig(z_cap=0.95, tail_tolerance=1e-15)),
    ),
    (
        "sls_integral s=2.5 16 levels",
        lambda: sls_integral(2.5, math.pi / 3, QuadConfig(levels=16, abs_tol=0.0)),
    ),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    numba_k = get_kernels("numba")
    numpy_k = get_kernels("numpy")

    # trigger jit compilation outside the timed region
    for _, call in CASES:
        call(numba_k)

    print(f"{'case':36s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for label, call in CASES:
        np_best, _ = time_call(lambda: call(numpy_k), args.repeat)
        nb_best, _ = time_call(lambda: call(numba_k), args.repeat)
        print(
            f"{label:36s} {np_best * 1e3:9.2f}ms {nb_best * 1e3:9.2f}ms "
            f"{np_best / nb_best:7.1f}x"
        )

    print()
    print("public API (backend chosen by LOGSINE_BACKEND):")
    import os

    for label, call in API_CASES:
        row = {}
        for name in ("numpy", "numba"):
            os.environ["LOGSINE_BACKEND"] = name
            call()  # warm path selection
            best, _ = time_call(call, args.repeat)
            row[name] = best
        os.environ.pop("LOGSINE_BACKEND", None)
        print(
            f"{label:36s} {row['numpy'] * 1e3:9.2f}ms {row['numba'] * 1e3:9.2f}ms "
            f"{row['numpy'] / row['numba']:7.1f}x"
        )


if __name__ == "__main__":
    main()
