"""Closed-form walk counts on unitary Cayley graphs, and the unit-sum counts
they yield.

X_n is the graph on vertices 0..n-1 with an edge {a, b} iff gcd(a - b, n) = 1.
The number of length-k walks between two of its vertices comes out of three
reductions, each exact over the integers:

* Complete graphs.  In K_m the off-diagonal entry of the k-th adjacency
  power is b(m, k) = ((m-1)^k - (-1)^k) / m and the diagonal entry is
  a(m, k) = (m-1) * b(m, k-1); the division is exact because
  (m-1)^k = (-1)^k (mod m).

* Square-free moduli.  For square-free n, X_n is isomorphic to the
  Kronecker product of the complete graphs K_p over the primes p | n,
  and walk counts multiply across Kronecker factors.  Each prime
  contributes a(p, k) when i = j (mod p) and b(p, k) otherwise.

* Arbitrary moduli.  X_n is the blow-up of X_rad(n) in which every
  vertex is replaced by n/rad(n) twins, so every k-walk count scales by
  (n/rad(n))^(k-1), with endpoints read modulo rad(n).

Ordered k-tuples of units summing to a target residue r are in bijection
with k-walks from 0 to r (partial sums trace the walk), so the same
closed form counts unit-sum representations.

All counts are exact Python ints; they grow like (n-1)^k, so nothing
here ever rounds.  The brute-force counterpart of every function in this
module lives in :mod:`unitwalks.oracle`.
"""

from .errors import DomainError
from .numtheory import PrimePartition, factorize, prime_partition, radical


def _open_complete_walks(n: int, k: int) -> int:
    # (n-1)^k == (-1)^k (mod n) makes the division exact.
    value = (n - 1) ** k - (-1) ** k
    assert value % n == 0
    return value // n


def complete_walks(n: int, k: int, closed: bool = False) -> int:
    """Number of length-k walks between two vertices of K_n.

    ``closed`` selects coinciding endpoints (the diagonal of the k-th
    adjacency power); otherwise the endpoints are distinct.  k = 0 counts
    the trivial walk: 1 if closed, 0 if open.
    """
    if n < 2:
        raise DomainError("modulus must be at least 2")
    if k < 0:
        raise DomainError("walk length must be nonnegative")
    if k == 0:
        return 1 if closed else 0
    if closed:
        return (n - 1) * _open_complete_walks(n, k - 1)
    return _open_complete_walks(n, k)


def _per_prime_product(part: PrimePartition, k: int) -> int:
    total = 1
    for p in part.congruent:
        total *= complete_walks(p, k, closed=True)
    for p in part.noncongruent:
        total *= complete_walks(p, k, closed=False)
    return total


def radical_walks(n: int, k: int, i: int, j: int) -> int:
    """Number of length-k walks from i to j in X_n for square-free n.

    The count is the product over primes p | n of a complete-graph count
    in K_p: the closed count when i = j (mod p), the open count when not.
    Rejects non-square-free n; k = 0 belongs to :func:`walks`, which owns
    the trivial-walk convention.
    """
    f = factorize(n)
    if radical(f) != n:
        raise DomainError("radical_walks requires square-free modulus")
    if k < 1:
        raise DomainError("walk length must be at least 1")
    if not 0 <= i < n or not 0 <= j < n:
        raise DomainError("vertex labels must lie in [0, n)")
    return _per_prime_product(prime_partition(f, i, j), k)


def walks(n: int, k: int, i: int, j: int) -> int:
    """Number of length-k walks from vertex i to vertex j in X_n.

    The blow-up exponent (n/rad(n))^(k-1) assumes k >= 1, so k = 0 is
    special-cased to identity-matrix semantics (1 iff i = j).  Fast for
    n up to 10**12 and k up to 10**5: one factorization plus one
    big-integer power per distinct prime.
    """
    if k < 0:
        raise DomainError("walk length must be nonnegative")
    f = factorize(n)
    if not 0 <= i < n or not 0 <= j < n:
        raise DomainError("vertex labels must lie in [0, n)")
    if k == 0:
        return 1 if i == j else 0
    r = radical(f)
    # The partition only sees (i - j) mod p with p | rad(n), so reducing
    # the labels mod rad(n) is implicit.
    part = prime_partition(f, i, j)
    return (n // r) ** (k - 1) * _per_prime_product(part, k)


def unit_sum_count(n: int, k: int, r: int) -> int:
    """Number of ordered k-tuples of units mod n that sum to r (mod n).

    Equals the number of k-walks from 0 to r in X_n: the partial sums of
    a tuple of units form such a walk, and the steps of such a walk are
    units summing to r.  k = 0 is rejected; no empty-sum convention is
    adopted.
    """
    if k < 1:
        raise DomainError("number of summands must be at least 1")
    return walks(n, k, 0, r)


def homogeneous_sum_count(n: int, k: int) -> int:
    """Number of ordered k-tuples of units mod n summing to 0 (mod n).

    Evaluated directly as the r = 0 product, where every prime dividing n
    contributes its closed complete-graph factor:

        (n/rad(n))^(k-1) * prod over p | n of a(p, k)

    Identical to ``unit_sum_count(n, k, 0)`` by construction of the walk
    bijection.
    """
    if k < 1:
        raise DomainError("number of summands must be at least 1")
    f = factorize(n)
    total = (n // radical(f)) ** (k - 1)
    for p, _ in f.factors:
        total *= complete_walks(p, k, closed=True)
    return total
