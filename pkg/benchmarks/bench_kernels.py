"""Compare the compiled and pure-Python search kernels.

Both backends must return the same phi and the same witness colouring;
the script exits non-zero otherwise.

    python3 benchmarks/bench_kernels.py --sizes 12 16 20 --reps 3
"""

from __future__ import annotations

import argparse
import sys
import time

from bchromatic import _kernels
from bchromatic.bcolor import b_chromatic_number
from bchromatic.harness import random_graph


def timed(g, backend, reps):
    best = float("inf")
    for _ in range(reps):
        start = time.perf_counter()
        result = b_chromatic_number(g, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[12, 14, 16, 18, 20])
    parser.add_argument("--densities", type=float, nargs="+", default=[0.3, 0.5, 0.7])
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args(argv)

    if _kernels.BACKEND != "cython":
        print("compiled kernels are not available; build with `pip install -e . --no-build-isolation`")
        return 2

    print(f"{'n':>3} {'p':>4} {'phi':>4} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    mismatches = 0
    for n in args.sizes:
        for p in args.densities:
            g = random_graph(n, p, args.seed + n)
            t_py, (phi_py, cert_py) = timed(g, "python", args.reps)
            t_cy, (phi_cy, cert_cy) = timed(g, "cython", args.reps)
            same = phi_py == phi_cy and cert_py == cert_cy
            mismatches += not same
            speedup = t_py / t_cy if t_cy > 0 else float("inf")
            flag = "" if same else "  MISMATCH"
            print(f"{n:3d} {p:4.1f} {phi_cy:4d} {t_py:10.4f} {t_cy:10.4f} {speedup:7.0f}x{flag}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
