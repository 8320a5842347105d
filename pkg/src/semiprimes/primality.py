"""Wheel-based primality indicator, prime counting, and prime-table construction.

The indicator needs no stored primes at all: a number x >= 8 is prime exactly
when it is divisible by neither 2 nor 3 nor any integer of the form 6k-1 or
6k+1 for k = 1 .. wheel_limit(x).  Each helper below is one piece of that
statement, returns 0 or 1, and is exact integer arithmetic throughout.
"""

from dataclasses import dataclass

from .intmath import (
    MAX_CLASSIFY_INPUT,
    MAX_COUNT_INPUT,
    DomainError,
    RangeLimitError,
    as_natural,
    wheel_limit,
)

# Divisor-free primality for arguments the wheel construction cannot reach:
# with fewer than two (6k+-1) pairs available below 8, these are pinned by
# lookup so that every caller receives a correct indicator at any argument.
_SMALL_PRIMALITY = {1: 0, 2: 1, 3: 1, 4: 0, 5: 1, 6: 0, 7: 1}


def _classification_arg(x, low, name):
    x = as_natural(x, "x")
    if x > MAX_CLASSIFY_INPUT:
        raise RangeLimitError(
            f"{name} accepts inputs up to {MAX_CLASSIFY_INPUT}, got {x}"
        )
    if x < low:
        raise DomainError(f"{name} requires x >= {low}, got {x}")
    return x


def t0(x: int) -> int:
    """1 if x is divisible by neither 2 nor 3, else 0 (x >= 1)."""
    x = _classification_arg(x, 1, "t0")
    return 1 if x % 2 and x % 3 else 0


def t1(x: int) -> int:
    """1 if no divisor 6k-1, k = 1 .. wheel_limit(x), divides x (x >= 8).

    Equals the floor of the mean of the per-divisor indicators; since each
    is 0 or 1, that is the all-ones test, so the scan may stop at the first
    divisor found.
    """
    x = _classification_arg(x, 8, "t1")
    for d in range(5, 6 * wheel_limit(x) + 1, 6):
        if x % d == 0:
            return 0
    return 1


def t2(x: int) -> int:
    """1 if no divisor 6k+1, k = 1 .. wheel_limit(x), divides x (x >= 8)."""
    x = _classification_arg(x, 8, "t2")
    for d in range(7, 6 * wheel_limit(x) + 3, 6):
        if x % d == 0:
            return 0
    return 1


def t(x: int) -> int:
    """Primality indicator: 1 exactly when x is prime.

    For x >= 8 this is floor((t0 + t1 + t2) / 3), i.e. the conjunction of the
    three wheel indicators, evaluated here as one early-exit divisor scan.
    For 1 <= x <= 7 the value comes from the lookup extension, so t is a
    correct primality indicator at every argument it can receive (the
    semiprime test applies t to quotients as small as 4).
    """
    x = _classification_arg(x, 1, "t")
    if x < 8:
        return _SMALL_PRIMALITY[x]
    if x % 2 == 0 or x % 3 == 0:
        return 0
    for d in range(5, 6 * wheel_limit(x) + 1, 6):
        if x % d == 0 or x % (d + 2) == 0:
            return 0
    return 1


def prime_count_formula(x: int) -> int:
    """Number of primes <= x, for x >= 8, summing t over the 6j+5 / 6j+7 grids.

    The two sums range over arguments clamped to <= x (an unclamped ceiling
    bound on j would count indicators past x and overshoot); the constant 4
    accounts for the primes 2, 3, 5, 7 that the grids start above.
    """
    x = as_natural(x, "x")
    if x < 8:
        raise DomainError(f"prime_count_formula requires x >= 8, got {x}")
    if x > MAX_COUNT_INPUT:
        raise RangeLimitError(
            f"prime_count_formula accepts inputs up to {MAX_COUNT_INPUT}, got {x}"
        )
    total = 4
    for v in range(11, x + 1, 6):  # 6j+5, j >= 1
        total += t(v)
    for v in range(13, x + 1, 6):  # 6j+7, j >= 1
        total += t(v)
    return total


@dataclass(frozen=True)
class PrimeTable:
    """Ascending tuple of exactly the primes <= limit."""

    limit: int
    primes: tuple

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def build_prime_table(limit: int, mode: str = "formula") -> PrimeTable:
    """All primes <= limit, either by the t indicator or by the oracle sieve.

    Both modes must return identical tables; 'sieve' is much faster for large
    limits, 'formula' needs no mutable state at all.
    """
    limit = as_natural(limit, "limit")
    if limit < 2:
        raise DomainError(f"build_prime_table requires limit >= 2, got {limit}")
    if mode == "formula":
        return PrimeTable(limit, tuple(x for x in range(2, limit + 1) if t(x)))
    if mode == "sieve":
        from . import oracle

        return oracle.sieve(limit)
    raise ValueError(f"unknown mode {mode!r}; expected 'formula' or 'sieve'")
