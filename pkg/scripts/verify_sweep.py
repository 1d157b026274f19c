#!/usr/bin/env python3
"""Sweep the closed form against the brute-force oracle, timing both paths.

Correctness: for each modulus n, every walk count for k up to --max-k and
all vertex pairs is computed through the closed form and through exact
adjacency-matrix powers, and compared.  Exit code 3 on any disagreement.

Timing: for each n the single query walks(n, max_k, 0, 1) is timed cold
on both paths (the oracle must build and exponentiate the matrix; the
closed form must factor n), which is the cost an ad-hoc query actually
pays.

Usage:
    python scripts/verify_sweep.py [--max-n N] [--max-k K]
"""

import argparse
import sys
import time
from pathlib import Path

try:
    import unitwalks  # noqa: F401
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from unitwalks import build_adjacency, factorize, matrix_power_walks, walks
from unitwalks.oracle import identity, multiply


def sweep(max_n: int, max_k: int) -> int:
    print(
        f"{'n':>4} {'cells':>8} {'status':<8} "
        f"{'query closed-form':>18} {'query oracle':>13} {'speedup':>8}"
    )
    mismatches = 0
    for n in range(2, max_n + 1):
        adjacency = build_adjacency(n, cap=max(n, 512))
        powers = []
        p = identity(n)
        for k in range(max_k + 1):
            if k == 1:
                p = adjacency
            elif k > 1:
                p = multiply(p, adjacency)
            powers.append(p)

        bad = sum(
            1
            for k in range(max_k + 1)
            for i in range(n)
            for j in range(n)
            if walks(n, k, i, j) != powers[k].entries[i][j]
        )
        mismatches += bad
        cells = (max_k + 1) * n * n
        status = "ok" if bad == 0 else f"{bad} BAD"

        factorize.cache_clear()
        t0 = time.perf_counter()
        walks(n, max_k, 0, 1)
        t_fast = time.perf_counter() - t0

        t0 = time.perf_counter()
        matrix_power_walks(build_adjacency(n, cap=max(n, 512)), max_k, 0, 1)
        t_oracle = time.perf_counter() - t0

        speedup = t_oracle / t_fast if t_fast > 0 else float("inf")
        print(
            f"{n:>4} {cells:>8} {status:<8} "
            f"{t_fast * 1e6:>16.1f}us {t_oracle * 1e3:>11.2f}ms {speedup:>7.0f}x"
        )
    print()
    if mismatches:
        print(f"FAILED: {mismatches} mismatching cells")
        return 3
    print("all cells agree")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=40, metavar="N")
    parser.add_argument("--max-k", type=int, default=8, metavar="K")
    args = parser.parse_args()
    return sweep(args.max_n, args.max_k)


if __name__ == "__main__":
    sys.exit(main())
