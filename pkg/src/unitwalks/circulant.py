"""Circulant first rows: arbitrary powers of the X_n adjacency matrix.

A circulant matrix is determined by its first row (entry (i, j) is
c[(j - i) mod n]) and circulants are closed under multiplication, so the
k-th power of the X_n adjacency matrix is delivered as the single row
(walks(n, k, 0, 0), ..., walks(n, k, 0, n-1)) in n evaluations of the
closed form.  ``circ_multiply`` is the generic product for cross-checks.
"""

from dataclasses import dataclass

from .closed_form import walks
from .errors import DomainError


@dataclass(frozen=True)
class CirculantRow:
    """First row c_0..c_{n-1} of an n x n circulant matrix."""

    n: int
    row: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or len(self.row) != self.n:
            raise DomainError("circulant row length must equal n")

    def entry(self, i: int, j: int) -> int:
        """Entry (i, j) of the full matrix: c[(j - i) mod n]."""
        if not 0 <= i < self.n or not 0 <= j < self.n:
            raise DomainError("vertex labels must lie in [0, n)")
        return self.row[(j - i) % self.n]


def adjacency_power_row(n: int, k: int) -> CirculantRow:
    """First row of the k-th power of the X_n adjacency matrix.

    k = 0 yields circ(1, 0, ..., 0), the identity.
    """
    return CirculantRow(n, tuple(walks(n, k, 0, m) for m in range(n)))


def circ_multiply(a: CirculantRow, b: CirculantRow) -> CirculantRow:
    """First row of the product of two circulants: a cyclic convolution.

    Naive quadratic convolution over exact integers; entries are big
    ints and verification dimensions are small, so no FFT.
    """
    if a.n != b.n:
        raise DomainError("circulant dimensions must match")
    n = a.n
    row = tuple(sum(a.row[t] * b.row[(m - t) % n] for t in range(n)) for m in range(n))
    return CirculantRow(n, row)
