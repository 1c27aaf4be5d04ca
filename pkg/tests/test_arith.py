import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from qtlab.arith import (
    DomainError,
    FactorBudget,
    IncompleteFactorization,
    divisors,
    factorize,
    int_sqrt,
    is_perfect_square,
    is_prime,
    squarefree_part,
    valuation,
)


@pytest.mark.parametrize("n, r", [(0, 0), (15125, 122), (25, 5)])
def test_int_sqrt_examples(n, r):
    assert int_sqrt(n) == r


def test_int_sqrt_oracle_15125():
    assert 122 * 122 == 14884 <= 15125 < 123 * 123 == 15129


def test_int_sqrt_negative():
    with pytest.raises(DomainError):
        int_sqrt(-1)


@given(st.integers(min_value=0, max_value=10**40))
def test_int_sqrt_bracket(n):
    r = int_sqrt(n)
    assert r * r <= n < (r + 1) ** 2


@pytest.mark.parametrize("n, expected", [(25, True), (-56, False), (45, False), (0, True), (1, True)])
def test_is_perfect_square(n, expected):
    assert is_perfect_square(n) is expected


@pytest.mark.parametrize(
    "n, q, expected", [(-4864, 2, (8, -19)), (15125, 11, (2, 125)), (7, 5, (0, 7))]
)
def test_valuation_examples(n, q, expected):
    assert valuation(n, q) == expected
    k, m = expected
    assert q**k * m == n


def test_valuation_errors():
    with pytest.raises(DomainError):
        valuation(0, 2)
    with pytest.raises(DomainError):
        valuation(12, 4)


@given(st.integers(min_value=-(10**30), max_value=10**30).filter(bool), st.sampled_from([2, 3, 5, 7, 11, 101]))
def test_valuation_property(n, q):
    k, m = valuation(n, q)
    assert q**k * m == n and m % q != 0


def _trial_prime(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


@pytest.mark.parametrize("n", [229, 239])
def test_is_prime_examples(n):
    assert _trial_prime(n)
    assert is_prime(n)


def test_is_prime_small_agrees_with_trial_division():
    assert [n for n in range(-5, 5000) if is_prime(n)] == [n for n in range(-5, 5000) if _trial_prime(n)]


def test_is_prime_strong_pseudoprimes():
    # composites that fool several small-base Miller-Rabin tests
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321, 3825123056546413051):
        assert not is_prime(n)
    assert is_prime(2**61 - 1) and is_prime(2**89 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))


@pytest.mark.parametrize(
    "n, factors",
    [(15125, ((5, 3), (11, 2))), (-7168, ((2, 10), (7, 1))), (229, ((229, 1),))],
)
def test_factorize_examples(n, factors):
    f = factorize(n)
    assert f.complete and f.factors == factors
    assert f.sign * math.prod(p**e for p, e in f.factors) == n


def test_factorize_minus_7168_is_discriminant_of_4_minus_1():
    assert 256 * (-1) ** 3 - 27 * 4**4 == -7168


def test_factorize_zero():
    with pytest.raises(DomainError):
        factorize(0)


def test_factorize_beyond_trial_bound_uses_rho():
    n = 1000003 * 1000033 * 2**5
    f = factorize(n, FactorBudget(trial_division_bound=100))
    assert f.complete and f.factors == ((2, 5), (1000003, 1), (1000033, 1))


def test_factorize_incomplete_under_tiny_budget():
    n = (2**61 - 1) * (2**89 - 1)
    f = factorize(n, FactorBudget(trial_division_bound=100, rho_cap=8))
    assert not f.complete and f.unfactored_cofactor == n
    with pytest.raises(IncompleteFactorization):
        squarefree_part(n, FactorBudget(trial_division_bound=100, rho_cap=8))


def test_factorize_round_trip_random():
    rng = random.Random(20261015)
    for _ in range(10**4):
        n = rng.randint(1, 10**18) * rng.choice((1, -1))
        f = factorize(n)
        assert f.sign * math.prod(p**e for p, e in f.factors) * f.unfactored_cofactor == n
        primes = f.primes
        assert primes == sorted(set(primes)) and all(is_prime(p) for p in primes)
        assert f.complete == (f.unfactored_cofactor == 1)


@pytest.mark.parametrize("n, s", [(18, 2), (-12, -3), (49, 1)])
def test_squarefree_part_examples(n, s):
    assert squarefree_part(n) == s


@settings(max_examples=300)
@given(st.integers(min_value=-(10**12), max_value=10**12).filter(bool))
def test_squarefree_part_property(n):
    s = squarefree_part(n)
    quotient, rem = divmod(n, s)
    assert rem == 0 and quotient > 0 and is_perfect_square(quotient)
    assert all(e == 1 for _, e in factorize(s).factors)


def test_divisors():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(-25) == (1, 5, 25)
