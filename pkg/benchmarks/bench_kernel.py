"""Time the compiled and pure-Python coset kernels on the same cases.

Usage: python benchmarks/bench_kernel.py [--groups F4 E6 E7] [--repeat 3]

Both backends walk the full coset tree of each case; the script checks that
their aggregates agree and reports best-of-N wall time and the speedup.
"""

import argparse
import sys
import time

from unipotent_sqint.cosets import run_enumeration
from unipotent_sqint.kernel import available_backends
from unipotent_sqint.nilpotent import parameters
from unipotent_sqint.sqint import case_setup, kernel_tables, key_space


def best_time(fn, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="+", default=["G2", "F4", "E6", "E7"])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=3)
    args = ap.parse_args(argv)
    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernel is not built; run `pip install -e . --no-build-isolation`",
              file=sys.stderr)
        return 1
    print(f"{'case':36} {'cosets':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for g in args.groups:
        for case in parameters(g):
            setup = case_setup(case)
            if not setup.supported:
                continue
            tables = kernel_tables(setup, key_space(setup), args.kmax)
            tp, rp = best_time(lambda: run_enumeration(setup.rs, tables, backend="python"),
                               args.repeat)
            tc, rc = best_time(lambda: run_enumeration(setup.rs, tables, backend="compiled"),
                               args.repeat)
            if rp != rc:
                print(f"{g} {case.fixed_type} {case.saturation}: backends disagree", file=sys.stderr)
                return 1
            label = f"{g} {case.fixed_type} {case.saturation}"
            print(f"{label:36} {rc[1]:>10} {tp:>10.3f} {tc:>11.4f} {tp / tc:>7.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
