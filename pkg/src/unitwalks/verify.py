"""Formula-vs-oracle verification sweeps.

Compares every closed-form count against the brute-force oracle over a
rectangle of moduli and walk lengths: all (i, j) walk counts, unit-sum
counts for every target residue, and full circulant rows.  Cells are
scanned in ascending (n, k) order so the first counterexample, should
one ever exist, is deterministic.
"""

import time
from dataclasses import dataclass
from typing import Optional

from .circulant import adjacency_power_row
from .closed_form import unit_sum_count, walks
from .numtheory import factorize, totient
from .oracle import (
    DEFAULT_ORACLE_CAP,
    build_adjacency,
    enumerate_unit_sums,
    identity,
    multiply,
)

# Skip unit-sum enumeration for a cell once n * phi(n)**k tuples would
# exceed this; the walks comparison still covers the cell.
DEFAULT_ENUMERATION_BUDGET = 5_000_000


@dataclass(frozen=True)
class SweepConfig:
    """Bounds for one verification sweep (all inclusive)."""

    max_n: int = 20
    max_k: int = 6
    oracle_cap: int = DEFAULT_ORACLE_CAP
    enumeration_budget: int = DEFAULT_ENUMERATION_BUDGET


@dataclass(frozen=True)
class Mismatch:
    """First disagreement found: the query and both values."""

    check: str  # "walks" | "circ-row" | "unit-sums"
    n: int
    k: int
    i: int
    j: int  # target residue for unit sums
    closed_form: int
    oracle: int

    def describe(self) -> str:
        query = f"n={self.n} k={self.k} i={self.i} j={self.j}"
        return (
            f"{self.check} {query}: closed-form {self.closed_form} "
            f"!= oracle {self.oracle}"
        )


@dataclass
class SweepReport:
    """Outcome of a sweep: comparison counts per check, first mismatch."""

    config: SweepConfig
    comparisons: dict[str, int]
    skipped_unit_sum_cells: int
    mismatch: Optional[Mismatch]
    elapsed_ms: float

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    @property
    def total_comparisons(self) -> int:
        return sum(self.comparisons.values())


def run_sweep(config: SweepConfig = SweepConfig()) -> SweepReport:
    """Run the full sweep; stops at the first mismatch."""
    t0 = time.perf_counter()
    comparisons = {"walks": 0, "circ-row": 0, "unit-sums": 0}
    skipped = 0
    mismatch = None

    for n in range(2, config.max_n + 1):
        if mismatch:
            break
        adjacency = build_adjacency(n, cap=config.oracle_cap)
        phi = totient(factorize(n))
        power = identity(n)
        for k in range(0, config.max_k + 1):
            if k == 1:
                power = adjacency
            elif k > 1:
                power = multiply(power, adjacency)

            for i in range(n):
                row = power.entries[i]
                for j in range(n):
                    fast = walks(n, k, i, j)
                    comparisons["walks"] += 1
                    if fast != row[j]:
                        mismatch = Mismatch("walks", n, k, i, j, fast, row[j])
                        break
                if mismatch:
                    break
            if mismatch:
                break

            fast_row = adjacency_power_row(n, k)
            for m in range(n):
                comparisons["circ-row"] += 1
                if fast_row.row[m] != power.entries[0][m]:
                    mismatch = Mismatch(
                        "circ-row", n, k, 0, m, fast_row.row[m], power.entries[0][m]
                    )
                    break
            if mismatch:
                break

            if k >= 1:
                if n * phi**k > config.enumeration_budget:
                    skipped += 1
                else:
                    for r in range(n):
                        fast = unit_sum_count(n, k, r)
                        slow = enumerate_unit_sums(n, k, r)
                        comparisons["unit-sums"] += 1
                        if fast != slow:
                            mismatch = Mismatch("unit-sums", n, k, 0, r, fast, slow)
                            break
                    if mismatch:
                        break

    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return SweepReport(config, comparisons, skipped, mismatch, elapsed_ms)
