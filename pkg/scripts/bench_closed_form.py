#!/usr/bin/env python3
"""Time the closed-form walk counter far beyond the oracle's reach.

The brute-force path is cubic in n per matrix multiply; the closed form
needs one factorization plus a handful of big-integer powers, so moduli
around 10^12 with walk lengths in the tens of thousands stay fast.  The
table reports wall time and the decimal size of the exact count.

Usage:
    python scripts/bench_closed_form.py [--repeat R]
"""

import argparse
import sys
import time
from pathlib import Path

try:
    import unitwalks  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from unitwalks import factorize, unit_sum_count

CASES = [
    # (n, k, note)
    (30030, 100, "2*3*5*7*11*13"),
    (2**20, 1000, "2^20"),
    (10**9 + 7, 100, "prime"),
    (963761198400, 1000, "2^6*3^4*5^2*7*...*23"),
    (963761198400, 100_000, "same n, long walks"),
    (999999999989, 1000, "12-digit prime"),
]


def bench(repeat: int) -> None:
    print(f"{'n':>14} {'k':>7} {'note':<24} {'best time':>10} {'digits':>8}")
    for n, k, note in CASES:
        best = float("inf")
        digits = 0
        for _ in range(repeat):
            factorize.cache_clear()
            t0 = time.perf_counter()
            value = unit_sum_count(n, k, 0)
            best = min(best, time.perf_counter() - t0)
            digits = len(str(value))
        print(f"{n:>14} {k:>7} {note:<24} {best * 1000:>8.2f}ms {digits:>8}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    bench(args.repeat)
    return 0


if __name__ == "__main__":
    sys.exit(main())
