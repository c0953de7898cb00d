"""Compare the oracle's pure-Python and compiled enumeration kernels.

Runs the same factorization counts through both, checks the results
agree, and prints a timing table. Usage:

    python benchmarks/bench_oracle.py [--repeat N]
"""

import argparse
import time

from hurwitz import _oracle_py

try:
    from hurwitz import _speedups
except ImportError:
    _speedups = None

CASES = [(3, 6), (4, 6), (4, 8), (5, 6)]


def measure(kernel, d, r, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter_ns()
        result = kernel.count_factorizations(d, r)
        elapsed = time.perf_counter_ns() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best


def fmt_ns(ns):
    if ns >= 10**9:
        return f"{ns / 10**9:8.2f} s "
    if ns >= 10**6:
        return f"{ns / 10**6:8.2f} ms"
    return f"{ns / 10**3:8.2f} us"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per case, best time wins")
    args = parser.parse_args()

    if _speedups is None:
        print("compiled kernel not available; timing the fallback only")

    header = f"{'case':>10}  {'python':>11}"
    if _speedups is not None:
        header += f"  {'cython':>11}  {'speedup':>8}"
    header += "  counts (identity, transitive)"
    print(header)

    for d, r in CASES:
        py_result, py_ns = measure(_oracle_py, d, r, args.repeat)
        line = f"  d={d} r={r}  {fmt_ns(py_ns)}"
        if _speedups is not None:
            cy_result, cy_ns = measure(_speedups, d, r, args.repeat)
            if cy_result != py_result:
                raise SystemExit(
                    f"kernel mismatch at d={d}, r={r}: "
                    f"{py_result} vs {cy_result}"
                )
            line += f"  {fmt_ns(cy_ns)}  {py_ns / cy_ns:7.1f}x"
        line += f"  {py_result}"
        print(line)


if __name__ == "__main__":
    main()
