"""Floor/ceiling transcriptions of the indicator definitions, over exact rationals.

Production code never calls these.  They evaluate the defining expressions
with none of the shortcuts the fast paths take: per-argument prime tables, no
early exits, and aggregate floor-of-mean / ceiling-of-mean forms instead of
all/any tests.  Quotients are fractions.Fraction values, so the floors and
ceilings are exact by construction rather than by integer identity, which
makes these useful as an independent reference route in the tests.
"""

import math
from fractions import Fraction

from .intmath import DomainError, as_natural, ceil_div, icbrt, wheel_limit
from .primality import t


def _require(x, low, name):
    x = as_natural(x, "x")
    if x < low:
        raise DomainError(f"{name} requires x >= {low}, got {x}")
    return x


def _frac_nondiv(x, d):
    # ceil(x/d - floor(x/d)) over exact rationals
    q = Fraction(x, d)
    return math.ceil(q - math.floor(q))


def t0_literal(x: int) -> int:
    x = _require(x, 1, "t0_literal")
    return math.floor(Fraction(_frac_nondiv(x, 2) + _frac_nondiv(x, 3), 2))


def t1_literal(x: int) -> int:
    x = _require(x, 8, "t1_literal")
    m = wheel_limit(x)
    s = sum(_frac_nondiv(x, 6 * k - 1) for k in range(1, m + 1))
    return math.floor(Fraction(s, m))


def t2_literal(x: int) -> int:
    x = _require(x, 8, "t2_literal")
    m = wheel_limit(x)
    s = sum(_frac_nondiv(x, 6 * k + 1) for k in range(1, m + 1))
    return math.floor(Fraction(s, m))


def t_literal(x: int) -> int:
    x = _require(x, 8, "t_literal")
    return math.floor(Fraction(t0_literal(x) + t1_literal(x) + t2_literal(x), 3))


def _fresh_prime_table(x):
    # rebuilt per argument on purpose: the unshared, unbatched reading
    from . import oracle

    return oracle.sieve(icbrt(x)).primes


def k1_literal(x: int) -> int:
    x = _require(x, 8, "k1_literal")
    primes = _fresh_prime_table(x)
    s = 0
    for p in primes:
        q = Fraction(x, p)
        s += math.ceil(math.ceil(q) - q)
    return math.floor(Fraction(s, len(primes)))


def k2_literal(x: int) -> int:
    x = _require(x, 8, "k2_literal")
    primes = _fresh_prime_table(x)
    s = 0
    for p in primes:
        q = Fraction(x, p)
        # the divisibility factor zeroes the term unless p | x, and the
        # primality indicator is consulted at the rounded-up quotient, an
        # integer, which coincides with x/p on every surviving term
        s += math.floor(q - math.ceil(q) + 1) * t(ceil_div(x, p))
    return math.ceil(Fraction(s, len(primes)))


def semiprime_indicator_literal(x: int) -> int:
    """k1 + k2 - t with every constituent evaluated in literal form."""
    return k1_literal(x) + k2_literal(x) - t_literal(x)
