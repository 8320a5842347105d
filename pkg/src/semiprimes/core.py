"""Semiprimality indicators, the (T, K1, K2) classification, and counting.

The working principle: a number with three or more prime factors must have a
prime factor not exceeding its cube root.  So for x >= 8,

  k1(x) = 1  iff no prime p <= icbrt(x) divides x        (x is prime or
              a semiprime whose factors both exceed the cube root),
  k2(x) = 1  iff some prime p <= icbrt(x) divides x with x/p prime
              (x is a semiprime with a small factor),

and combining them with the primality indicator t gives
k1(x) + k2(x) - t(x) = 1 exactly for semiprimes.
"""

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .intmath import (
    MAX_CLASSIFY_INPUT,
    MAX_COUNT_INPUT,
    DomainError,
    RangeLimitError,
    as_natural,
    icbrt,
)
from .primality import t


class IndicatorTriple(NamedTuple):
    t: int
    k1: int
    k2: int


class Category(enum.Enum):
    PRIME = "prime"
    SEMIPRIME = "semiprime"
    COMPOSITE_MANY_FACTORS = "composite-many-factors"


@dataclass(frozen=True)
class Classification:
    """Category of an integer plus the indicator triple that produced it.

    For 2 <= x <= 7 the triple machinery does not apply; the category comes
    from a lookup and ``triple`` is None.
    """

    category: Category
    triple: Optional[IndicatorTriple]

    @property
    def small_domain(self) -> bool:
        return self.triple is None


# The only triples that can occur for x >= 8, and what each means.
_TRIPLE_CATEGORY = {
    IndicatorTriple(1, 1, 0): Category.PRIME,
    IndicatorTriple(0, 1, 0): Category.SEMIPRIME,  # both factors > icbrt(x)
    IndicatorTriple(0, 0, 1): Category.SEMIPRIME,  # smaller factor <= icbrt(x)
    IndicatorTriple(0, 0, 0): Category.COMPOSITE_MANY_FACTORS,
}

_SMALL_CATEGORY = {
    2: Category.PRIME,
    3: Category.PRIME,
    4: Category.SEMIPRIME,
    5: Category.PRIME,
    6: Category.SEMIPRIME,
    7: Category.PRIME,
}

# Semiprime counts for arguments below 8 (index by N): semiprimes 4 and 6.
_SMALL_PI2 = (0, 0, 0, 0, 1, 1, 2, 2)


def _indicator_arg(x, name):
    x = as_natural(x, "x")
    if x > MAX_CLASSIFY_INPUT:
        raise RangeLimitError(f"{name} accepts inputs up to {MAX_CLASSIFY_INPUT}, got {x}")
    if x < 8:
        raise DomainError(f"{name} requires x >= 8, got {x}")
    return x


@lru_cache(maxsize=256)
def _primes_upto(limit: int) -> tuple:
    # Self-contained divisor table: the primality indicator generates its own
    # primes, so the formula path never consults the oracle sieve.
    return tuple(x for x in range(2, limit + 1) if t(x))


def k1(x: int) -> int:
    """1 if no prime p <= icbrt(x) divides x, else 0 (x >= 8).

    Floor of the mean of the per-prime nondivisibility indicators, i.e. the
    all-ones test; the scan stops at the first dividing prime.  The prime
    table is nonempty for every x >= 8 since icbrt(8) = 2.
    """
    x = _indicator_arg(x, "k1")
    for p in _primes_upto(icbrt(x)):
        if x % p == 0:
            return 0
    return 1


def k2(x: int) -> int:
    """1 if some prime p <= icbrt(x) divides x with x/p prime, else 0 (x >= 8).

    Ceiling of the mean of the per-prime terms, i.e. the any-test.  Each term
    multiplies a divisibility factor by t at the quotient, so t is only ever
    consulted at exact integer quotients; non-divisors contribute 0 outright.
    """
    x = _indicator_arg(x, "k2")
    for p in _primes_upto(icbrt(x)):
        if x % p == 0 and t(x // p) == 1:
            return 1
    return 0


def _triple_bits(x: int) -> IndicatorTriple:
    # Fused evaluation of (t, k1, k2) sharing one divisor scan.  A prime
    # divisor p <= icbrt(x) <= sqrt(x) is always one of the wheel's own
    # divisors, so finding one already settles t(x) = 0.
    has_small_factor = False
    for p in _primes_upto(icbrt(x)):
        if x % p == 0:
            has_small_factor = True
            if t(x // p) == 1:
                return IndicatorTriple(0, 0, 1)
    if has_small_factor:
        return IndicatorTriple(0, 0, 0)
    return IndicatorTriple(t(x), 1, 0)


@lru_cache(maxsize=1 << 18)
def semiprime_indicator(x: int) -> int:
    """1 exactly when x is a semiprime, else 0, for x >= 8.

    Computed as k1(x) + k2(x) - t(x).  Callers needing 4 <= x <= 7 should use
    classify, which handles the small domain by lookup.
    """
    x = _indicator_arg(x, "semiprime_indicator")
    tb, k1b, k2b = _triple_bits(x)
    return k1b + k2b - tb


def classify(x: int) -> Classification:
    """Categorize x >= 2 as prime, semiprime, or >= 3 prime factors."""
    x = as_natural(x, "x")
    if x > MAX_CLASSIFY_INPUT:
        raise RangeLimitError(f"classify accepts inputs up to {MAX_CLASSIFY_INPUT}, got {x}")
    if x < 2:
        raise DomainError(f"classify requires x >= 2, got {x}")
    if x < 8:
        return Classification(_SMALL_CATEGORY[x], None)
    trip = _triple_bits(x)
    return Classification(_TRIPLE_CATEGORY[trip], trip)


def count_range(lo: int, hi: int) -> int:
    """Sum of semiprime_indicator over lo..hi inclusive (8 <= lo <= hi).

    Consecutive ranges compose exactly: splitting [8, N] anywhere and adding
    the pieces always reproduces semiprime_count(N) - 2.
    """
    lo = as_natural(lo, "lo")
    hi = as_natural(hi, "hi")
    if lo < 8:
        raise DomainError(f"count_range requires lo >= 8, got {lo}")
    if lo > hi:
        raise DomainError(f"count_range requires lo <= hi, got [{lo}, {hi}]")
    if hi > MAX_COUNT_INPUT:
        raise RangeLimitError(f"count_range accepts endpoints up to {MAX_COUNT_INPUT}, got {hi}")
    return sum(map(semiprime_indicator, range(lo, hi + 1)))


def _partitions(lo, hi, pieces):
    size = hi - lo + 1
    pieces = min(pieces, size)
    step, extra = divmod(size, pieces)
    bounds = []
    start = lo
    for i in range(pieces):
        end = start + step - 1 + (1 if i < extra else 0)
        bounds.append((start, end))
        start = end + 1
    return bounds


def semiprime_count(n: int, threads: int = 1) -> int:
    """Number of semiprimes <= n, for n >= 1.

    For n >= 8 this is 2 + sum of the indicator over 8..n (the constant 2
    covers the semiprimes 4 and 6); below 8 a lookup applies.  With
    threads > 1 the range is split into that many consecutive partitions
    evaluated concurrently and reduced in partition order, so the result is
    identical for every thread count.
    """
    n = as_natural(n, "n")
    if n < 1:
        raise DomainError("semiprime_count requires n >= 1")
    if n > MAX_COUNT_INPUT:
        raise RangeLimitError(f"semiprime_count accepts inputs up to {MAX_COUNT_INPUT}, got {n}")
    if n < 8:
        return _SMALL_PI2[n]
    threads = as_natural(threads, "threads")
    if threads < 1:
        raise DomainError("threads must be >= 1")
    if threads == 1:
        return 2 + count_range(8, n)
    parts = _partitions(8, n, threads)
    with ThreadPoolExecutor(max_workers=len(parts)) as pool:
        return 2 + sum(pool.map(lambda span: count_range(*span), parts))
