"""Benchmark the pure-Python kernels against the compiled extension.

Usage: python benchmarks/bench_kernels.py [--limit N] [--repeat R]

Runs the library's hot loops (balanced digit extraction, bound checking,
and both membership scans) over identical inputs with each backend and
prints a timing table. Requires the compiled extension for a comparison;
otherwise only the pure timings are shown.
"""

import argparse
import time

from ztop import _kernels_py
from ztop.pivots import make_pivots

try:
    from ztop import _kernels_cy
except ImportError:
    _kernels_cy = None


def bench_decompose(kernels, limit, chains):
    for pivots in chains:
        terms = pivots.terms_until(limit, extra=1)
        for l in range(-limit, limit + 1):
            kernels.decompose_digits(l, terms)


def bench_checks(kernels, limit, chains):
    for pivots in chains:
        terms = pivots.terms_until(limit, extra=1)
        for l in range(-limit, limit + 1):
            digits = kernels.decompose_digits(l, terms)
            kernels.coefficient_checks(digits, terms)


def bench_member_direct(kernels, limit, chains):
    for pivots in chains:
        for m in (1, 8):
            terms = pivots.terms_until(4 * m * limit, extra=1)
            for k in range(-limit, limit + 1):
                kernels.member_direct_scan(k, terms, m)


def bench_member_partial(kernels, limit, chains):
    for pivots in chains:
        for m in (1, 8):
            terms = pivots.terms_until(4 * m * limit, extra=1)
            for k in range(-limit, limit + 1):
                kernels.member_partial_scan(k, terms, m)


WORKLOADS = [
    ("decompose_digits", bench_decompose),
    ("coefficient_checks", bench_checks),
    ("member_direct_scan", bench_member_direct),
    ("member_partial_scan", bench_member_partial),
]


def run(kernels, fn, limit, chains, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernels, limit, chains)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=20000, help="sweep |value| <= limit")
    parser.add_argument("--repeat", type=int, default=3, help="best of this many runs")
    args = parser.parse_args()

    chains = [make_pivots("linear"), make_pivots("square")]
    print(f"sweep limit {args.limit}, best of {args.repeat}, chains: linear, square")
    if _kernels_cy is None:
        print("compiled kernels not built; timing the pure backend only")
    header = f"{'workload':<22}{'python (s)':>12}"
    if _kernels_cy is not None:
        header += f"{'compiled (s)':>14}{'speedup':>9}"
    print(header)
    for name, fn in WORKLOADS:
        t_py = run(_kernels_py, fn, args.limit, chains, args.repeat)
        line = f"{name:<22}{t_py:>12.3f}"
        if _kernels_cy is not None:
            t_cy = run(_kernels_cy, fn, args.limit, chains, args.repeat)
            line += f"{t_cy:>14.3f}{t_py / t_cy:>9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
