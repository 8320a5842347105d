import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semiprimes import (
    Category,
    DomainError,
    RangeLimitError,
    classify,
    count_range,
    icbrt,
    k1,
    k2,
    oracle,
    semiprime_count,
    semiprime_indicator,
    t,
)

VALID_TRIPLES = {(1, 1, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0)}


def _category_for_omega(omega):
    if omega == 1:
        return Category.PRIME
    if omega == 2:
        return Category.SEMIPRIME
    return Category.COMPOSITE_MANY_FACTORS


def test_k1_examples():
    assert k1(9) == 1  # icbrt(9) = 2, table (2,), 9 is odd
    assert k1(10) == 0
    assert k1(30) == 0


def test_k2_examples():
    assert k2(10) == 1  # 2 | 10 and 5 is prime, via the small-domain t
    assert k2(33) == 1  # 3 | 33 and 11 is prime
    assert k2(8) == 0  # 8/2 = 4 is not prime


def test_indicator_examples():
    assert semiprime_indicator(14) == 1
    assert semiprime_indicator(13) == 0
    assert semiprime_indicator(30) == 0


def test_indicator_domain_and_range():
    for fn in (k1, k2, semiprime_indicator):
        with pytest.raises(DomainError):
            fn(7)
    with pytest.raises(RangeLimitError):
        semiprime_indicator(10**12 + 1)


def test_classify_examples():
    prime = classify(13)
    assert prime.category is Category.PRIME
    assert prime.triple == (1, 1, 0)
    semi = classify(14)
    assert semi.category is Category.SEMIPRIME
    assert semi.triple == (0, 0, 1)
    many = classify(30)
    assert many.category is Category.COMPOSITE_MANY_FACTORS
    assert many.triple == (0, 0, 0)


def test_classify_square_of_prime_uses_large_factor_case():
    semi = classify(9409)  # 97 * 97, both factors above icbrt
    assert semi.category is Category.SEMIPRIME
    assert semi.triple == (0, 1, 0)


def test_classify_small_domain():
    for x, cat in ((2, Category.PRIME), (3, Category.PRIME), (4, Category.SEMIPRIME),
                   (5, Category.PRIME), (6, Category.SEMIPRIME), (7, Category.PRIME)):
        result = classify(x)
        assert result.category is cat
        assert result.triple is None
        assert result.small_domain
    assert not classify(13).small_domain


def test_classify_domain_and_range():
    with pytest.raises(DomainError):
        classify(1)
    with pytest.raises(DomainError):
        classify(0)
    with pytest.raises(RangeLimitError):
        classify(10**12 + 1)


def test_classification_against_oracle_to_2e4():
    for x in range(8, 2 * 10**4 + 1):
        profile = oracle.factor_profile(x)
        result = classify(x)
        assert result.triple in VALID_TRIPLES, (x, result.triple)
        assert result.category is _category_for_omega(profile.omega), x
        assert semiprime_indicator(x) == (1 if profile.omega == 2 else 0), x


def test_fused_triple_matches_standalone_indicators():
    for x in range(8, 2001):
        assert classify(x).triple == (t(x), k1(x), k2(x)), x


@given(st.integers(min_value=8, max_value=10**10))
@settings(max_examples=60)
def test_fused_triple_matches_standalone_property(x):
    assert classify(x).triple == (t(x), k1(x), k2(x))


def test_k1_equals_small_divisor_existence_to_1e5():
    # k1 = 0 exactly when some prime <= icbrt(x) divides x
    primes = oracle.sieve(icbrt(10**5)).primes
    for x in range(8, 10**5 + 1):
        c = icbrt(x)
        has_small = any(x % p == 0 for p in primes if p <= c)
        assert k1(x) == (0 if has_small else 1), x


def test_semiprime_factor_bounds_against_oracle_to_1e5():
    # triple (0,1,0): both prime factors above icbrt(x);
    # triple (0,0,1): the smaller factor is <= icbrt(x)
    for x in range(8, 10**5 + 1):
        result = classify(x)
        if result.category is not Category.SEMIPRIME:
            continue
        p, q = oracle.factor_profile(x).factors
        c = icbrt(x)
        if result.triple == (0, 1, 0):
            assert p > c and q > c, x
        else:
            assert result.triple == (0, 0, 1), x
            assert p <= c, x


def test_count_examples():
    assert semiprime_count(10) == 4
    assert semiprime_count(100) == 34
    assert semiprime_count(8) == 2


def test_count_small_domain():
    assert [semiprime_count(n) for n in range(1, 8)] == [0, 0, 0, 1, 1, 2, 2]


def test_count_domain_and_range():
    with pytest.raises(DomainError):
        semiprime_count(0)
    with pytest.raises(RangeLimitError):
        semiprime_count(10**9 + 1)
    with pytest.raises(DomainError):
        semiprime_count(100, threads=0)


def test_count_range_examples():
    assert count_range(8, 10) == 2  # 9 and 10
    assert count_range(8, 8) == 0  # 8 = 2^3
    assert count_range(8, 100) == 32


def test_count_range_domain():
    with pytest.raises(DomainError):
        count_range(7, 10)
    with pytest.raises(DomainError):
        count_range(10, 9)
    with pytest.raises(RangeLimitError):
        count_range(8, 10**9 + 1)


def test_count_steps_match_classification():
    acc = semiprime_count(7)
    for x in range(8, 3001):
        step = semiprime_indicator(x)
        assert step in (0, 1)
        assert (step == 1) == (classify(x).category is Category.SEMIPRIME), x
        acc += step
    assert acc == semiprime_count(3000)


def test_threads_do_not_change_counts():
    expected = semiprime_count(10**4)
    for threads in (2, 3, 4, 8, 64):
        assert semiprime_count(10**4, threads=threads) == expected


@given(st.lists(st.integers(min_value=9, max_value=5000), max_size=6))
@settings(max_examples=40)
def test_count_range_composition_over_random_splits(cuts):
    bounds = [8] + sorted(set(cuts)) + [5001]
    total = 0
    for a, b in zip(bounds, bounds[1:]):
        if a < b:
            total += count_range(a, b - 1)
    assert total == semiprime_count(5000) - 2


def test_large_inputs_within_contract():
    # 999979 * 999983 = 999962000357; the oracle confirms both factors prime
    big = 999962000357
    profile = oracle.factor_profile(big)
    assert profile.factors == (999979, 999983)
    result = classify(big)
    assert result.category is Category.SEMIPRIME
    assert result.triple == (0, 1, 0)  # icbrt is 9999, both factors exceed it
    assert classify(10**12).category is Category.COMPOSITE_MANY_FACTORS
    assert classify(10**9 + 7).category is Category.PRIME
