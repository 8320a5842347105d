"""Independent ground-truth implementations used only for cross-validation.

Deliberately naive: trial division walks every candidate divisor (no 6k+-1
wheel) and the sieve is the classical one, so these share no machinery with
the indicator formulas they validate.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass

from .intmath import DomainError, RangeLimitError, as_natural
from .primality import PrimeTable

#: bytearray memory budget for the prime sieve.
SIEVE_LIMIT = 10**8
#: list-of-int memory budget for the factor-counting sieve.
FACTOR_SIEVE_LIMIT = 10**7


def _composite_flags(limit):
    flags = bytearray(limit + 1)
    for p in range(2, math.isqrt(limit) + 1):
        if not flags[p]:
            start = p * p
            flags[start :: p] = b"\x01" * ((limit - start) // p + 1)
    return flags


def _prime_list(limit):
    flags = _composite_flags(limit)
    return [x for x in range(2, limit + 1) if not flags[x]]


def sieve(limit: int) -> PrimeTable:
    """Exact prime table <= limit via the classical sieve."""
    limit = as_natural(limit, "limit")
    if limit < 2:
        raise DomainError(f"sieve requires limit >= 2, got {limit}")
    if limit > SIEVE_LIMIT:
        raise RangeLimitError(f"sieve supports limits up to {SIEVE_LIMIT}, got {limit}")
    return PrimeTable(limit, tuple(_prime_list(limit)))


@dataclass(frozen=True)
class FactorProfile:
    """Full prime factorization of subject, with multiplicity, ascending."""

    subject: int
    factors: tuple

    @property
    def omega(self) -> int:
        """Prime factors counted with multiplicity."""
        return len(self.factors)


def factor_profile(x: int) -> FactorProfile:
    """Factor x >= 2 by trial division over every integer candidate."""
    x = as_natural(x, "x")
    if x < 2:
        raise DomainError(f"factor_profile requires x >= 2, got {x}")
    left = x
    found = []
    d = 2
    while d * d <= left:
        while left % d == 0:
            found.append(d)
            left //= d
        d += 1
    if left > 1:
        found.append(left)
    return FactorProfile(x, tuple(found))


def is_semiprime_oracle(x: int) -> int:
    """1 exactly when trial division finds two prime factors with multiplicity."""
    return 1 if factor_profile(x).omega == 2 else 0


def classical_count(n: int) -> int:
    """Semiprimes <= n counted from a prime table up to n/2.

    For each prime p <= sqrt(n) there are pi(n/p) - pi(p) + 1 semiprimes
    whose smaller factor is p, which telescopes to the sum below.  All pi
    lookups are bisections into one sieve-built table, so this route is
    independent of the indicator formulas.
    """
    n = as_natural(n, "n")
    if n < 4:
        raise DomainError(f"classical_count requires n >= 4, got {n}")
    if n // 2 > SIEVE_LIMIT:
        raise RangeLimitError(
            f"classical_count needs a sieve to n/2; supported up to n = {2 * SIEVE_LIMIT}"
        )
    primes = _prime_list(max(2, n // 2))
    total = 0
    for i, p in enumerate(primes):
        if p * p > n:
            break
        total += bisect_right(primes, n // p) - i
    return total


def semiprime_count_by_sieve(n: int) -> int:
    """Semiprimes <= n counted by factoring every integer with an spf sieve."""
    n = as_natural(n, "n")
    if n < 1:
        raise DomainError(f"semiprime_count_by_sieve requires n >= 1, got {n}")
    if n > FACTOR_SIEVE_LIMIT:
        raise RangeLimitError(
            f"semiprime_count_by_sieve supports n up to {FACTOR_SIEVE_LIMIT}, got {n}"
        )
    if n < 4:
        return 0
    spf = list(range(n + 1))
    for p in range(2, math.isqrt(n) + 1):
        if spf[p] == p:
            for m in range(p * p, n + 1, p):
                if spf[m] == m:
                    spf[m] = p
    count = 0
    for x in range(4, n + 1):
        left = x
        parts = 0
        while left > 1 and parts < 3:
            left //= spf[left]
            parts += 1
        if parts == 2 and left == 1:
            count += 1
    return count
