"""Timing comparison of the numba and numpy enumeration backends.

Runs the same brute-force Max H-Col scans through both kernel backends and
prints a small table.  Usage:

    python3 benchmarks/bench_backends.py [--repeat N]

The first numba call includes JIT compilation; a warm-up run is excluded
from the timings.
"""

import argparse
import time

from homdist import kernels
from homdist.graphs import complete, cycle, petersen, wheel
from homdist.oracle import WeightFunction, mc

CASES = [
    ("K2 -> C13", complete(2), cycle(13)),
    ("K3 -> W10", complete(3), wheel(10)),
    ("C5 -> petersen", cycle(5), petersen()),
    ("C7 -> petersen", cycle(7), petersen()),
]


def run_case(h, g, repeat):
    w = WeightFunction.uniform(g)
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value, _ = mc(h, g, w, budget=10**10)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timed repetitions per case (best is reported)")
    args = parser.parse_args()

    if not kernels._HAVE_NUMBA:
        parser.error("numba backend unavailable; nothing to compare "
                     "(unset HOMDIST_BACKEND or install numba)")

    # warm up the JIT so compilation is not billed to the first case
    run_case(complete(2), cycle(5), 1)

    print(f"{'case':>16} {'maps':>12} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, h, g in CASES:
        maps = h.vertex_count ** g.vertex_count
        value_nb, t_nb = run_case(h, g, args.repeat)
        kernels._HAVE_NUMBA = False
        try:
            value_np, t_np = run_case(h, g, args.repeat)
        finally:
            kernels._HAVE_NUMBA = True
        assert value_nb == value_np, f"backend disagreement on {name}"
        print(f"{name:>16} {maps:>12} {t_nb:>9.4f}s {t_np:>9.4f}s "
              f"{t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
