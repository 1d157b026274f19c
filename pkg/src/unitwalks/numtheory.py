"""Integer factorization and the derived quantities the walk formulas consume.

Everything downstream needs exactly three things about a modulus n: its
prime factorization, rad(n) (the product of the distinct primes), and
phi(n) (the unit count). ``prime_partition`` additionally splits the
primes of n by whether two residues agree modulo each prime, which is
what selects the per-prime factor in the closed-form product.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError

# Witness set making Miller-Rabin deterministic for n < 3.3e24, far past
# the supported modulus range of 10**12.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """A modulus n >= 2 with its prime factorization.

    ``factors`` holds (prime, exponent) pairs with primes strictly
    increasing and exponents >= 1; their product must reconstruct n.
    Validated on construction so that hand-built instances cannot drift
    from what :func:`factorize` would produce.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise DomainError("modulus must be at least 2")
        product = 1
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise DomainError("primes must be distinct and strictly increasing")
            if e < 1:
                raise DomainError("exponents must be at least 1")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            product *= p**e
            previous = p
        if product != self.n:
            raise DomainError("factor product does not reconstruct n")


@dataclass(frozen=True)
class PrimePartition:
    """The primes of a modulus, split by a congruence i = j (mod p).

    ``congruent`` holds the primes p | n with i = j (mod p), and
    ``noncongruent`` the rest; together they cover every distinct prime
    of n exactly once.
    """

    congruent: tuple[int, ...]
    noncongruent: tuple[int, ...]


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Factor n by trial division (2, then odd candidates up to sqrt).

    Deterministic and dependency-free; intended for n up to 10**12,
    where the worst case is about a million trial divisions.
    """
    if n < 2:
        raise DomainError("modulus must be at least 2")
    factors = []
    remaining = n
    e = 0
    while remaining % 2 == 0:
        remaining //= 2
        e += 1
    if e:
        factors.append((2, e))
    d = 3
    while d * d <= remaining:
        e = 0
        while remaining % d == 0:
            remaining //= d
            e += 1
        if e:
            factors.append((d, e))
        d += 2
    if remaining > 1:
        factors.append((remaining, 1))
    return Factorization(n, tuple(factors))


def radical(f: Factorization) -> int:
    """Product of the distinct primes dividing n (square-free by construction)."""
    result = 1
    for p, _ in f.factors:
        result *= p
    return result


def totient(f: Factorization) -> int:
    """Euler phi: the number of residues in [0, n) coprime to n."""
    result = 1
    for p, e in f.factors:
        result *= p ** (e - 1) * (p - 1)
    return result


def prime_partition(f: Factorization, i: int, j: int) -> PrimePartition:
    """Split the primes of n by whether i and j agree modulo each prime."""
    if not 0 <= i < f.n or not 0 <= j < f.n:
        raise DomainError("vertex labels must lie in [0, n)")
    congruent = []
    noncongruent = []
    for p, _ in f.factors:
        if (i - j) % p == 0:
            congruent.append(p)
        else:
            noncongruent.append(p)
    return PrimePartition(tuple(congruent), tuple(noncongruent))
