import math
import warnings

import pytest

from semiprimes import (
    DomainError,
    RangeLimitError,
    gate,
    next_semiprime,
    nth_semiprime,
    semiprime_stream,
)


def test_gate_examples():
    assert gate(5, 4) == 1
    assert gate(5, 5) == 0
    assert gate(1, 0) == 1


def test_gate_exhaustive():
    for n in range(1, 101):
        for x in range(0, 201):
            assert gate(n, x) == (1 if x < n else 0), (n, x)


def test_gate_domain():
    with pytest.raises(DomainError):
        gate(0, 3)
    with pytest.raises(DomainError):
        gate(5, -1)


def test_nth_examples():
    assert nth_semiprime(5) == 14
    assert nth_semiprime(100) == 314
    assert nth_semiprime(1000) == 3595


def test_nth_lookup_cases():
    for mode in ("scan", "literal"):
        assert nth_semiprime(1, mode=mode) == 4
        assert nth_semiprime(2, mode=mode) == 6


def test_nth_domain_and_range():
    with pytest.raises(DomainError):
        nth_semiprime(0)
    with pytest.raises(RangeLimitError):
        nth_semiprime(10**8)  # window 4*n*ln(n) overflows the counting range
    with pytest.raises(ValueError):
        nth_semiprime(5, mode="guess")


def test_nth_against_oracle_list(semis_10k):
    for n in (3, 4, 5, 10, 17, 100, 500, 1000, 2000, len(semis_10k)):
        assert nth_semiprime(n) == semis_10k[n - 1], n


def test_nth_modes_agree_small():
    for n in list(range(3, 51)) + [75, 100]:
        assert nth_semiprime(n, mode="literal") == nth_semiprime(n), n


def test_nth_window_is_not_short_in_practice():
    with warnings.catch_warnings():
        warnings.simplefilter("error", RuntimeWarning)
        for n in range(3, 60):
            nth_semiprime(n)


def test_nth_ordinal_bound_to_1e4(semis_10k):
    # sp_n stays below 4*n*ln(n) across the whole table
    for n in range(3, len(semis_10k) + 1):
        assert semis_10k[n - 1] <= int(4 * n * math.log(n)), n


def test_next_examples():
    assert next_semiprime(100) == 106
    assert next_semiprime(10000) == 10001
    assert next_semiprime(9) == 10


def test_next_small_domain_scan():
    assert next_semiprime(4) == 6
    assert next_semiprime(5) == 6
    assert next_semiprime(6) == 9
    assert next_semiprime(7) == 9
    assert next_semiprime(8) == 9


def test_next_domain():
    with pytest.raises(DomainError):
        next_semiprime(3)
    with pytest.raises(DomainError):
        next_semiprime(8, mode="literal")  # literal form starts at 9
    with pytest.raises(ValueError):
        next_semiprime(100, mode="guess")


def test_next_modes_agree():
    for n in range(9, 801):
        assert next_semiprime(n, mode="literal") == next_semiprime(n), n


def test_next_oracle_sweep_to_1e4(semi_flags_10k):
    for n in range(4, 10**4 + 1):
        v = next_semiprime(n)
        assert v > n, n
        assert semi_flags_10k[v], n
        assert not any(semi_flags_10k[m] for m in range(n + 1, v)), n


def test_stream_examples():
    assert semiprime_stream(4, 5) == [6, 9, 10, 14, 15]
    assert semiprime_stream(14, 1) == [15]
    assert semiprime_stream(100, 1) == [106]


def test_stream_empty_and_domain():
    assert semiprime_stream(4, 0) == []
    with pytest.raises(DomainError):
        semiprime_stream(3, 1)
