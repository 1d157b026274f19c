"""Circulant rows: closed-form adjacency powers and cyclic convolution."""

import pytest

from unitwalks import (
    CirculantRow,
    DomainError,
    adjacency_power_row,
    build_adjacency,
    circ_multiply,
    factorize,
    totient,
)


@pytest.mark.parametrize(
    "n, k, expected",
    [
        (4, 0, (1, 0, 0, 0)),
        (4, 1, (0, 1, 0, 1)),
        (4, 2, (2, 0, 2, 0)),
        (5, 2, (4, 3, 3, 3, 3)),
        (9, 2, (6, 3, 3, 6, 3, 3, 6, 3, 3)),
        (9, 3, (18, 27, 27, 18, 27, 27, 18, 27, 27)),
        (10, 4, (52, 0, 51, 0, 51, 0, 51, 0, 51, 0)),
        (12, 3, (0, 12, 0, 8, 0, 12, 0, 12, 0, 8, 0, 12)),
        (12, 4, (48, 0, 40, 0, 40, 0, 48, 0, 40, 0, 40, 0)),
    ],
)
def test_adjacency_power_row_examples(n, k, expected):
    assert adjacency_power_row(n, k).row == expected


def test_identity_multiplication():
    b = CirculantRow(5, (7, 1, 2, 3, 4))
    e = CirculantRow(5, (1, 0, 0, 0, 0))
    assert circ_multiply(e, b).row == b.row
    assert circ_multiply(b, e).row == b.row


def test_circ_multiply_examples():
    a = CirculantRow(4, (0, 1, 0, 1))
    assert circ_multiply(a, a).row == (2, 0, 2, 0)
    k2 = CirculantRow(2, (0, 1))
    assert circ_multiply(k2, k2).row == (1, 0)


def test_circ_multiply_commutes():
    a = CirculantRow(6, (1, 2, 3, 0, 5, 8))
    b = CirculantRow(6, (0, 1, 0, 4, 0, 9))
    assert circ_multiply(a, b).row == circ_multiply(b, a).row


def test_dimension_mismatch_rejected():
    with pytest.raises(DomainError, match="dimensions"):
        circ_multiply(CirculantRow(2, (0, 1)), CirculantRow(3, (0, 1, 1)))


def test_row_length_validated():
    with pytest.raises(DomainError, match="length"):
        CirculantRow(3, (1, 2))


def test_entry_accessor_expands_the_matrix():
    row = adjacency_power_row(12, 1)
    a = build_adjacency(12)
    for i in range(12):
        for j in range(12):
            assert row.entry(i, j) == a.entries[i][j]


def test_semigroup_property_small():
    for n in range(2, 13):
        step = adjacency_power_row(n, 1)
        acc = adjacency_power_row(n, 0)
        for k in range(0, 7):
            assert adjacency_power_row(n, k).row == acc.row
            acc = circ_multiply(acc, step)


def test_row_sum_and_symmetry():
    for n in (4, 9, 12, 15, 30):
        phi = totient(factorize(n))
        for k in range(0, 6):
            row = adjacency_power_row(n, k).row
            assert sum(row) == phi**k
            assert all(row[m] == row[(n - m) % n] for m in range(n))
