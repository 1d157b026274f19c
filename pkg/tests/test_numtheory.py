"""Factorization, radical, totient, and prime-partition behavior."""

from math import gcd, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitwalks import (
    DomainError,
    Factorization,
    factorize,
    is_prime,
    prime_partition,
    radical,
    totient,
)


@pytest.mark.parametrize(
    "n, factors",
    [
        (2, ((2, 1),)),
        (7, ((7, 1),)),
        (12, ((2, 2), (3, 1))),
        (360, ((2, 3), (3, 2), (5, 1))),
        (1024, ((2, 10),)),
        (999966000289, ((999983, 2),)),
        (963761198400, ((2, 6), (3, 4), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1))),
    ],
)
def test_factorize_examples(n, factors):
    f = factorize(n)
    assert f.n == n
    assert f.factors == factors


@pytest.mark.parametrize("n", [-5, 0, 1])
def test_factorize_rejects_below_two(n):
    with pytest.raises(DomainError, match="at least 2"):
        factorize(n)


def test_factorization_invariants_enforced():
    with pytest.raises(DomainError):
        Factorization(12, ((2, 1), (3, 1)))  # product != n
    with pytest.raises(DomainError):
        Factorization(12, ((3, 1), (2, 2)))  # primes out of order
    with pytest.raises(DomainError):
        Factorization(12, ((4, 1), (3, 1)))  # composite base
    with pytest.raises(DomainError):
        Factorization(2, ((2, 0),))  # zero exponent
    with pytest.raises(DomainError):
        Factorization(1, ())


@given(st.integers(min_value=2, max_value=10**9))
def test_factorize_reconstructs_n(n):
    f = factorize(n)
    product = 1
    for p, e in f.factors:
        assert is_prime(p)
        assert e >= 1
        product *= p**e
    assert product == n


def test_is_prime_known_values():
    assert is_prime(2)
    assert is_prime(3)
    assert is_prime(999983)
    assert is_prime(1000003)
    assert is_prime(999999999989)
    assert is_prime(2**61 - 1)
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)
    assert not is_prime(561)  # Carmichael number
    assert not is_prime(999966000289)


def test_is_prime_matches_trial_division_small():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, isqrt(n) + 1))

    for n in range(2000):
        assert is_prime(n) == slow(n)


@pytest.mark.parametrize("n, expected", [(12, 6), (7, 7), (8, 2), (360, 30), (2, 2)])
def test_radical_examples(n, expected):
    assert radical(factorize(n)) == expected


@pytest.mark.parametrize("n, expected", [(12, 4), (7, 6), (2, 1), (360, 96)])
def test_totient_examples(n, expected):
    assert totient(factorize(n)) == expected


def test_radical_sweep_divides_and_is_square_free():
    for n in range(2, 10_001):
        r = radical(factorize(n))
        assert n % r == 0
        assert all(r % (d * d) for d in range(2, isqrt(r) + 1))


def test_totient_sweep_matches_gcd_count():
    for n in range(2, 10_001):
        expected = sum(1 for r in range(n) if gcd(r, n) == 1)
        assert totient(factorize(n)) == expected


@pytest.mark.parametrize(
    "n, i, j, congruent, noncongruent",
    [
        (12, 0, 0, (2, 3), ()),
        (12, 0, 3, (3,), (2,)),
        (15, 1, 7, (3,), (5,)),
    ],
)
def test_prime_partition_examples(n, i, j, congruent, noncongruent):
    part = prime_partition(factorize(n), i, j)
    assert part.congruent == congruent
    assert part.noncongruent == noncongruent


def test_prime_partition_rejects_out_of_range_labels():
    f = factorize(12)
    for i, j in [(-1, 0), (0, 12), (12, 0), (0, -3)]:
        with pytest.raises(DomainError, match=r"\[0, n\)"):
            prime_partition(f, i, j)


@given(st.integers(min_value=2, max_value=10_000), st.data())
@settings(max_examples=200)
def test_prime_partition_partitions_the_prime_set(n, data):
    f = factorize(n)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1))
    part = prime_partition(f, i, j)
    assert tuple(sorted(part.congruent + part.noncongruent)) == tuple(p for p, _ in f.factors)
    assert not set(part.congruent) & set(part.noncongruent)
    assert all((i - j) % p == 0 for p in part.congruent)
    assert all((i - j) % p != 0 for p in part.noncongruent)
