"""Brute-force ground truth for everything in :mod:`unitwalks.closed_form`.

Build the adjacency matrix explicitly, exponentiate it with exact integer
arithmetic, enumerate unit tuples directly.  Deliberately naive: the value
of this module is being obviously correct, not fast.  Size caps keep the
cubic and exponential costs from running away; both are configuration
values, not hard limits, so sweeps on capable machines may raise them.
"""

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, ResourceLimitError
from .numtheory import factorize, radical

DEFAULT_ORACLE_CAP = 512          # max matrix dimension
DEFAULT_ENUMERATION_CAP = 10**8   # max phi(n)**k tuples per enumeration


@dataclass(frozen=True)
class DenseMatrix:
    """Square matrix of exact integers, stored as a tuple of row tuples."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1 or len(self.entries) != self.n:
            raise DomainError("matrix must be square with n rows")
        for row in self.entries:
            if len(row) != self.n:
                raise DomainError("matrix must be square with n columns")


def identity(n: int) -> DenseMatrix:
    """The n x n identity matrix."""
    return DenseMatrix(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def build_adjacency(n: int, cap: int = DEFAULT_ORACLE_CAP) -> DenseMatrix:
    """Adjacency matrix of X_n: entry (i, j) is 1 iff gcd(i - j, n) = 1."""
    if n < 2:
        raise DomainError("modulus must be at least 2")
    if n > cap:
        raise ResourceLimitError(f"n = {n} exceeds the oracle size cap {cap}")
    rows = tuple(tuple(1 if gcd(i - j, n) == 1 else 0 for j in range(n)) for i in range(n))
    return DenseMatrix(n, rows)


def complete_adjacency(n: int, cap: int = DEFAULT_ORACLE_CAP) -> DenseMatrix:
    """Adjacency matrix of the complete graph K_n: all ones off the diagonal."""
    if n < 2:
        raise DomainError("modulus must be at least 2")
    if n > cap:
        raise ResourceLimitError(f"n = {n} exceeds the oracle size cap {cap}")
    return DenseMatrix(n, tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n)))


def multiply(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """Naive cubic matrix product over exact integers."""
    if a.n != b.n:
        raise DomainError("matrix dimensions must match")
    cols = tuple(zip(*b.entries))
    rows = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a.entries
    )
    return DenseMatrix(a.n, rows)


def matrix_power(a: DenseMatrix, k: int) -> DenseMatrix:
    """a**k by binary exponentiation; a**0 is the identity."""
    if k < 0:
        raise DomainError("walk length must be nonnegative")
    result = identity(a.n)
    base = a
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def matrix_power_walks(a: DenseMatrix, k: int, i: int, j: int) -> int:
    """Entry (i, j) of a**k: the number of i-j walks of length k."""
    if not 0 <= i < a.n or not 0 <= j < a.n:
        raise DomainError("vertex labels must lie in [0, n)")
    return matrix_power(a, k).entries[i][j]


def enumerate_unit_sums(n: int, k: int, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Count ordered k-tuples of units mod n summing to r, by enumeration.

    Walks all phi(n)**k tuples depth-first; refuses when that exceeds
    ``cap``.
    """
    if n < 2:
        raise DomainError("modulus must be at least 2")
    if k < 1:
        raise DomainError("number of summands must be at least 1")
    if not 0 <= r < n:
        raise DomainError("target residue must lie in [0, n)")
    units = [u for u in range(n) if gcd(u, n) == 1]
    if len(units) ** k > cap:
        raise ResourceLimitError(
            f"phi(n)**k = {len(units) ** k} exceeds the enumeration cap {cap}"
        )
    return sum(1 for tup in itertools.product(units, repeat=k) if sum(tup) % n == r)


def neighborhood_class_check(n: int, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Check that vertices congruent mod rad(n) are non-adjacent twins.

    True iff every pair x != y with x = y (mod rad(n)) is a non-edge of
    X_n and rows x and y of the adjacency matrix coincide.  Vacuously
    true for square-free n, where the classes are singletons.
    """
    a = build_adjacency(n, cap=cap)
    r = radical(factorize(n))
    for x in range(n):
        row_x = a.entries[x]
        for y in range(x + r, n, r):
            if row_x[y] != 0:
                return False
            if row_x != a.entries[y]:
                return False
    return True
