import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, factor_list, symbols

from qtlab import polymod
from qtlab.arith import FactorBudget, IncompleteFactorization, factorize, is_prime
from qtlab.galois import PreconditionError
from qtlab.monogenic import (
    _split_multiplicities,
    dedekind_check,
    dedekind_monogenic,
    index_divisor_primes,
    is_monogenic,
    jks_prime_check,
)
from qtlab.trinomial import Trinomial, discriminant, is_irreducible

x = symbols("x")


def sympy_dedekind(coeffs, q):
    """Dedekind's criterion with the mod-q factorization taken from sympy."""
    a, b, c, d = coeffs
    f = x**4 + a * x**3 + b * x**2 + c * x + d
    _, factors = factor_list(f, modulus=q)
    G, H = Poly(1, x), Poly(1, x)
    for g, e in factors:
        g = Poly(g, x)  # integer lift with symmetric residues
        G *= g
        H *= g ** (e - 1)
    if H.degree() == 0:
        return True
    diff = [int(co) for co in (G * H - Poly(f, x)).all_coeffs()]
    assert all(v % q == 0 for v in diff)
    Fbar = Poly([v // q for v in diff], x, modulus=q)
    return Fbar.gcd(Poly(H, x, modulus=q)).degree() == 0


def irreducible_trinomials(bound):
    for c in range(-bound, bound + 1):
        for d in range(-bound, bound + 1):
            if c and d and is_irreducible(Trinomial(c, d)).irreducible:
                yield Trinomial(c, d)


def test_jks_examples():
    ch = jks_prime_check(Trinomial(5, 5), 5)
    assert (ch.case, ch.passes) == ("both_divide", True)
    ch = jks_prime_check(Trinomial(5, 5), 11)
    assert (ch.case, ch.passes) == ("neither", False)
    assert 15125 % 121 == 0
    ch = jks_prime_check(Trinomial(1, 1), 229)
    assert (ch.case, ch.passes) == ("neither", True)


def test_jks_preconditions():
    with pytest.raises(PreconditionError):
        jks_prime_check(Trinomial(5, 5), 7)  # 7 does not divide 15125
    with pytest.raises(PreconditionError):
        jks_prime_check(Trinomial(5, 5), 25)


def test_jks_detail_records_intermediates():
    # q = 2 divides c only: j = 2
    ch = jks_prime_check(Trinomial(2, 1), 2)
    assert ch.case == "c_only" and ch.detail == {"j": 2, "c2": 1, "d1": (1 + 1) // 2}
    # q = 3 divides d only: ell = 1
    ch = jks_prime_check(Trinomial(2, 3), 3)
    assert ch.case == "d_only" and ch.detail == {"ell": 1, "c1": (2 - 8) // 3, "d2": 1}


@pytest.mark.parametrize("c, d, status, failing", [(1, 1, "monogenic", ()), (5, 5, "not_monogenic", (11,)), (4, 2, "monogenic", ())])
def test_is_monogenic_examples(c, d, status, failing):
    v = is_monogenic(Trinomial(c, d))
    assert v.status == status and v.failing_primes == failing


def test_is_monogenic_4_2_factorization():
    v = is_monogenic(Trinomial(4, 2))
    assert v.discriminant.value == -4864 == -(2**8) * 19
    assert [ch.case for ch in v.checks] == ["both_divide", "neither"]


def test_is_monogenic_rejects_reducible():
    with pytest.raises(PreconditionError):
        is_monogenic(Trinomial(-4, 3))


@pytest.mark.parametrize("c, d, primes", [(5, 5, {11}), (1, 1, set()), (4, 2, set())])
def test_index_divisor_primes(c, d, primes):
    assert index_divisor_primes(Trinomial(c, d)) == primes


def test_unknown_status_under_tiny_budget():
    # the discriminant has prime factors far beyond a 10-prime trial bound
    T = Trinomial(1, 10**12 + 39)
    budget = FactorBudget(trial_division_bound=10, rho_cap=1)
    v = is_monogenic(T, budget)
    assert not v.discriminant.complete and v.status == "unknown"
    with pytest.raises(IncompleteFactorization):
        index_divisor_primes(T, budget)
    assert is_monogenic(T).discriminant.complete


@pytest.mark.parametrize(
    "coeffs, q, expected", [((0, 0, 5, 5), 11, False), ((0, 0, 1, 1), 229, True), ((0, -4, 0, 2), 2, True)]
)
def test_dedekind_examples(coeffs, q, expected):
    assert dedekind_check(coeffs, q) is expected
    assert sympy_dedekind(coeffs, q) is expected


def test_dedekind_accepts_coefficient_list():
    assert dedekind_check([5, 5, 0, 0, 1], 11) is False


def test_dedekind_preconditions():
    with pytest.raises(PreconditionError):
        dedekind_check((0, 0, 5, 5), 12)
    with pytest.raises(PreconditionError):
        dedekind_check([5, 5, 0, 2], 11)


def test_dedekind_matches_sympy_factoring():
    rng = random.Random(5)
    n = 0
    while n < 300:
        coeffs = tuple(rng.randint(-30, 30) for _ in range(4))
        disc = discriminant_general(coeffs)
        if disc == 0:
            continue
        for q in factorize(disc).primes[:3]:
            n += 1
            assert dedekind_check(coeffs, q) == sympy_dedekind(coeffs, q), (coeffs, q)


def discriminant_general(coeffs):
    a, b, c, d = coeffs
    return int(Poly(x**4 + a * x**3 + b * x**2 + c * x + d, x).discriminant())


@pytest.mark.parametrize("q", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47])
def test_exhaustive_and_gcd_split_agree(q):
    rng = random.Random(q)
    for _ in range(150):
        f = polymod.reduce([rng.randrange(q) for _ in range(4)] + [1], q)
        G, H = _split_multiplicities(f, q)
        Hg = polymod.gcd(f, polymod.derivative(f, q), q)
        Gg, rem = polymod.divmod_(f, Hg, q)
        assert not rem
        assert (G, H) == (Gg, Hg)


def test_jks_agrees_with_dedekind_on_small_box():
    n = 0
    for T in irreducible_trinomials(30):
        for q in factorize(discriminant(T)).primes:
            n += 1
            assert jks_prime_check(T, q).passes == dedekind_check(T.coeffs, q), (T, q)
    assert n > 1000


def test_literal_and_reduced_c_only_condition_agree():
    for T in irreducible_trinomials(60):
        for q in factorize(discriminant(T)).primes:
            if q == 2 or T.c % q or T.d % q == 0:
                continue
            ch = jks_prime_check(T, q)
            c2 = T.c // q
            assert ch.detail["d1"] == 0
            assert ch.passes == ((c2 * T.d * c2**4) % q != 0)


def test_literal_and_reduced_d_only_condition_agree():
    # for q > 3, c1 = 0, so only the first alternative (q | c1 and q !| d2) can hold
    for T in irreducible_trinomials(60):
        for q in factorize(discriminant(T)).primes:
            if q <= 3 or T.d % q or T.c % q == 0:
                continue
            ch = jks_prime_check(T, q)
            assert ch.detail["c1"] == 0
            assert ch.passes == ((T.d // q) % q != 0)


def test_squarefree_discriminant_shortcut():
    for T in irreducible_trinomials(40):
        fac = factorize(discriminant(T))
        if all(e == 1 for _, e in fac.factors):
            assert is_monogenic(T).status == "monogenic"


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**4, 10**4).filter(bool), st.integers(-10**4, 10**4).filter(bool))
def test_monotone_consistency(c, d):
    T = Trinomial(c, d)
    if not is_irreducible(T).irreducible:
        return
    v = is_monogenic(T)
    failing = [ch.q for ch in v.checks if not ch.passes]
    assert tuple(failing) == v.failing_primes
    if failing:
        assert v.status == "not_monogenic"
    assert dedekind_monogenic(T.coeffs).status == v.status


def test_companion_family_examples():
    for coeffs in ((0, -4, 0, 2), (0, 4, 0, 2), (0, -5, 0, 5)):
        assert dedekind_monogenic(coeffs).status == "monogenic"
    assert dedekind_monogenic((0, 0, 5, 5)).failing_primes == (11,)


def test_dedekind_large_prime_path():
    # q above the exhaustive limit uses gcd(f, f'); Delta(1,1) = 229 is prime
    assert is_prime(229) and dedekind_check((0, 0, 1, 1), 229)
