"""Exact walk counts on unitary Cayley graphs, sums of units mod n, and
circulant adjacency powers, with a brute-force oracle for verification.
"""

from .circulant import CirculantRow, adjacency_power_row, circ_multiply
from .closed_form import (
    complete_walks,
    homogeneous_sum_count,
    radical_walks,
    unit_sum_count,
    walks,
)
from .errors import DomainError, ResourceLimitError, UnitwalksError
from .numtheory import (
    Factorization,
    PrimePartition,
    factorize,
    is_prime,
    prime_partition,
    radical,
    totient,
)
from .oracle import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_ORACLE_CAP,
    DenseMatrix,
    build_adjacency,
    complete_adjacency,
    enumerate_unit_sums,
    matrix_power,
    matrix_power_walks,
    neighborhood_class_check,
)
from .verify import Mismatch, SweepConfig, SweepReport, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CirculantRow",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_ORACLE_CAP",
    "DenseMatrix",
    "DomainError",
    "Factorization",
    "Mismatch",
    "PrimePartition",
    "ResourceLimitError",
    "SweepConfig",
    "SweepReport",
    "UnitwalksError",
    "adjacency_power_row",
    "build_adjacency",
    "circ_multiply",
    "complete_adjacency",
    "complete_walks",
    "enumerate_unit_sums",
    "factorize",
    "homogeneous_sum_count",
    "is_prime",
    "matrix_power",
    "matrix_power_walks",
    "neighborhood_class_check",
    "prime_partition",
    "radical",
    "radical_walks",
    "run_sweep",
    "totient",
    "unit_sum_count",
    "walks",
]
