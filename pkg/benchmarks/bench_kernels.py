#!/usr/bin/env python3
"""Benchmark the compiled statistic kernels against the NumPy fallback.

Times single-statistic evaluations across sample sizes, then a small
warp-speed power row end to end under each backend.

Usage: python benchmarks/bench_kernels.py [--repeat 200]
"""

import argparse
import math
import time

import numpy as np

import paretogof._kernels_py as pure
from paretogof.ecf import u_weights, v_weights

try:
    import paretogof._kernels as native
except ImportError:
    native = None


def timeit(fn, repeat):
    best = math.inf
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn()
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_kernels(repeat):
    rng = np.random.default_rng(7)
    rows = []
    for n in (20, 50, 200, 800):
        m, a = 3, 2.0
        x = np.sort(rng.pareto(2.0, n) + 1.0)
        y = x ** (1.0 / m)
        v = v_weights(n, m)
        u = u_weights(n, m).astype(float) / float(math.comb(n, m))
        lx = np.log(x)
        for name, args in (
            ("vstat laplace", ("ecf_stat_laplace", (x, y, v, a))),
            ("vstat gauss", ("ecf_stat_gauss", (x, y, v, a))),
            ("ustat gauss", ("ecf_stat_gauss", (x, y, u, a))),
            ("mellin", ("mellin_stat", (lx, 2.0, 1.0))),
        ):
            fn_name, fn_args = args
            t_pure = timeit(lambda: getattr(pure, fn_name)(*fn_args), repeat)
            t_native = (
                timeit(lambda: getattr(native, fn_name)(*fn_args), repeat)
                if native
                else None
            )
            rows.append((name, n, t_pure, t_native))
    return rows


def bench_power_row():
    """One warp-speed row (all nine tests, n=20, mc=2000) per backend."""
    import os
    import subprocess
    import sys

    code = (
        "import time; t0=time.perf_counter();"
        "from paretogof import AlternativeSpec, BootstrapConfig, Family,"
        " default_battery, warp_speed_power_many, backend_name;"
        "warp_speed_power_many(AlternativeSpec(Family.WEIBULL, 1.5), 20,"
        " default_battery(), BootstrapConfig(b=2000, seed=1));"
        "print(backend_name(), time.perf_counter()-t0)"
    )
    out = []
    for env_pure in ("0", "1"):
        env = dict(os.environ, PARETO_GOF_PURE=env_pure)
        res = subprocess.run(
            [sys.executable, "-c", code], capture_output=True, text=True, env=env
        )
        out.append(res.stdout.strip())
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=200)
    args = parser.parse_args()

    if native is None:
        print("compiled extension unavailable; timing the fallback only\n")

    print(f"{'kernel':<16}{'n':>5}{'pure':>12}{'native':>12}{'speedup':>9}")
    for name, n, t_pure, t_native in bench_kernels(args.repeat):
        if t_native:
            print(f"{name:<16}{n:>5}{t_pure*1e6:>10.1f}us{t_native*1e6:>10.1f}us"
                  f"{t_pure/t_native:>8.1f}x")
        else:
            print(f"{name:<16}{n:>5}{t_pure*1e6:>10.1f}us{'-':>12}{'-':>9}")

    print("\nwarp-speed row, nine tests, n=20, mc=2000:")
    for line in bench_power_row():
        print("  " + line.replace(" ", " backend: ", 1) + "s")


if __name__ == "__main__":
    main()
