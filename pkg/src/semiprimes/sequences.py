"""Ordinal lookup (nth semiprime), successor search, and streaming.

Both query shapes come in two modes.  'scan' advances through the integers
consulting the semiprimality indicator and is the production path; 'literal'
evaluates the closed-form summations directly (a gated sum for the nth query,
a telescoping sum of products for the successor) and exists as a slow
reference equivalent.
"""

import math
import warnings

from .core import k1, k2, semiprime_indicator
from .intmath import MAX_COUNT_INPUT, DomainError, RangeLimitError, as_natural
from .primality import t

_MODES = ("scan", "literal")


def gate(n: int, x: int) -> int:
    """floor(2n / (n + x + 1)): 1 when x < n, 0 when x >= n (n >= 1, x >= 0).

    Turns a counting function into an ordinal formula: summing
    gate(n, count(x)) over x adds 1 exactly while fewer than n values have
    been counted.
    """
    n = as_natural(n, "n")
    x = as_natural(x, "x")
    if n < 1:
        raise DomainError("gate requires n >= 1")
    return (2 * n) // (n + x + 1)


def _search_window(n):
    # Empirical ordinal bound: the nth semiprime sits below 4*n*ln(n) for
    # n >= 3.  The lone float here only sizes a window; scan mode re-checks
    # it and keeps going if it were ever short.
    bound = int(4 * n * math.log(n))
    if bound > MAX_COUNT_INPUT:
        raise RangeLimitError(
            f"nth_semiprime search window {bound} exceeds the supported "
            f"range {MAX_COUNT_INPUT}"
        )
    return bound


def nth_semiprime(n: int, mode: str = "scan") -> int:
    """The nth semiprime in ascending order (sp_1 = 4, sp_2 = 6, ...).

    n = 1 and n = 2 are answered by lookup; the formulas start at n = 3.
    Literal mode evaluates 8 + sum over x of gate(n, count(x)) across the
    whole window, recomputing the count from scratch for every term; it is
    quadratic in the window size and intended for cross-checks only.
    """
    n = as_natural(n, "n")
    if n < 1:
        raise DomainError("semiprime indices start at 1")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected 'scan' or 'literal'")
    if n <= 2:
        return (4, 6)[n - 1]
    bound = _search_window(n)
    if mode == "literal":
        return _nth_literal(n, bound)
    running = 2
    x = 7
    while running < n:
        x += 1
        running += semiprime_indicator(x)
    if x > bound:
        warnings.warn(
            f"4*n*ln(n) window fell short for n={n}; result found by widening the scan",
            RuntimeWarning,
            stacklevel=2,
        )
    return x


def _nth_literal(n, bound):
    ind = [semiprime_indicator(m) for m in range(8, bound + 1)]
    total = 8
    pi2 = 2
    for i in range(1, len(ind) + 1):
        pi2 = 2 + sum(ind[:i])  # counting function re-evaluated per term
        total += (2 * n) // (n + 1 + pi2)
    if pi2 < n:
        raise RuntimeError(
            f"window 4*n*ln(n) = {bound} holds only {pi2} semiprimes, fewer than n={n}"
        )
    return total


def next_semiprime(n: int, mode: str = "scan") -> int:
    """Smallest semiprime strictly greater than n.

    Scan mode (n >= 4) walks upward consulting the indicator, with the
    below-8 stretch answered by lookup.  Literal mode (n >= 9) evaluates
    n + 1 + sum over i of the product of (1 + t - k1 - k2) across (n, n+i]:
    every product is 1 until the window first covers a semiprime and 0 from
    then on, so the products are accumulated incrementally and the loop stops
    at the first zero factor, which changes nothing in the total.
    """
    n = as_natural(n, "n")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected 'scan' or 'literal'")
    if mode == "literal":
        return _next_literal(n)
    if n < 4:
        raise DomainError(f"next_semiprime scan mode requires n >= 4, got {n}")
    x = n
    while True:
        x += 1
        if x >= 8:
            if semiprime_indicator(x):
                return x
        elif x in (4, 6):
            return x


def _next_literal(n):
    if n < 9:
        raise DomainError(f"next_semiprime literal mode requires n >= 9, got {n}")
    total = 0
    prod = 1
    for i in range(1, n + 1):
        x = n + i
        prod *= 1 + t(x) - k1(x) - k2(x)
        if prod == 0:
            return n + 1 + total
        total += prod
    # The sum's window implicitly assumes a semiprime within (n, 2n]; at any
    # practical scale the nearest semiprime is a handful of steps away.
    raise RuntimeError(f"no semiprime found in ({n}, {2 * n}]; window exhausted")


def semiprime_stream(start: int, count: int) -> list:
    """The first `count` semiprimes strictly greater than start, ascending."""
    start = as_natural(start, "start")
    if start < 4:
        raise DomainError(f"semiprime_stream requires start >= 4, got {start}")
    count = as_natural(count, "count")
    out = []
    current = start
    for _ in range(count):
        current = next_semiprime(current)
        out.append(current)
    return out
