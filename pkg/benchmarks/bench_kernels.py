#!/usr/bin/env python3
"""Benchmark the compiled slot kernel against the pure-Python fallback.

Run: python benchmarks/bench_kernels.py [--slots N]
"""

import argparse
import math
import time

import numpy as np

from noma_aloha import _kernel_py, build_power_ladder
from noma_aloha.sic import SINR_REL_SLACK

try:
    from noma_aloha import _kernel_cy
except ImportError:
    _kernel_cy = None


def time_backend(impl, n_slots, q, lam, gamma, seed=12345):
    ladder = build_power_ladder(gamma, q)
    mu = lam / q
    args = (seed, 0, n_slots, mu, math.exp(-mu), list(ladder.levels),
            gamma * (1.0 - SINR_REL_SLACK), False)
    t0 = time.perf_counter()
    hist = impl.run_slots(*args)
    dt = time.perf_counter() - t0
    return dt, np.asarray(hist)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--slots", type=int, default=200_000)
    ap.add_argument("--q", type=int, default=4)
    ap.add_argument("--lambda", dest="lam", type=float, default=2.0)
    ap.add_argument("--gamma", type=float, default=2.51189)
    args = ap.parse_args()

    dt_py, hist_py = time_backend(_kernel_py, args.slots, args.q, args.lam, args.gamma)
    print(f"python : {args.slots} slots in {dt_py:.3f}s  ({args.slots / dt_py:,.0f} slots/s)")

    if _kernel_cy is None:
        print("cython : extension not built (pip install -e . --no-build-isolation)")
        return

    # scale the compiled run up so the timing is meaningful
    factor = 50
    dt_cy, _ = time_backend(_kernel_cy, args.slots * factor, args.q, args.lam, args.gamma)
    per_slot = dt_cy / (args.slots * factor)
    print(f"cython : {args.slots * factor} slots in {dt_cy:.3f}s  ({1.0 / per_slot:,.0f} slots/s)")
    print(f"speedup: {dt_py / (per_slot * args.slots):,.1f}x")

    dt_cy_same, hist_cy = time_backend(_kernel_cy, args.slots, args.q, args.lam, args.gamma)
    match = np.array_equal(hist_py, hist_cy)
    print(f"bit-identical histograms: {match}")
    if not match:
        raise SystemExit("backend mismatch")


if __name__ == "__main__":
    main()
