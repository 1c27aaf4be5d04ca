import pytest
from hypothesis import given, strategies as st
from sympy import Poly, ZZ, symbols

from qtlab import polymod
from qtlab.arith import is_nonzero_square
from qtlab.quartic import cubic_discriminant, integer_cubic_roots, poly_mul
from qtlab.trinomial import (
    Trinomial,
    discriminant,
    integer_resolvent_roots,
    is_irreducible,
    resolvent,
    resolvent_roots_by_divisors,
    split_from_square_root,
)

x = symbols("x")
nonzero = st.integers(min_value=-500, max_value=500).filter(bool)


def test_trinomial_rejects_zero_coefficients():
    with pytest.raises(ValueError):
        Trinomial(0, 3)
    with pytest.raises(ValueError):
        Trinomial(2, 0)


@pytest.mark.parametrize("c, d, disc", [(1, 1, 229), (5, 5, 15125), (4, -1, -7168)])
def test_discriminant_examples(c, d, disc):
    assert discriminant(Trinomial(c, d)) == disc


@pytest.mark.parametrize("c, d", [(1, 1), (5, 5), (4, -1), (-4, 3), (13, -40)])
def test_discriminant_matches_sympy(c, d):
    assert discriminant(Trinomial(c, d)) == Poly(x**4 + c * x + d, x).discriminant()


@pytest.mark.parametrize(
    "c, d, poly", [(5, 5, [-25, -20, 0, 1]), (1, 1, [-1, -4, 0, 1]), (4, -1, [-16, 4, 0, 1])]
)
def test_resolvent_examples(c, d, poly):
    assert resolvent(Trinomial(c, d)).poly() == poly


@given(nonzero, nonzero)
def test_resolvent_discriminant_cross_check(c, d):
    T = Trinomial(c, d)
    # generic cubic route vs the closed form for the trinomial
    assert cubic_discriminant(0, -4 * d, -c * c) == discriminant(T) == resolvent(T).discriminant()


@pytest.mark.parametrize("c, d, roots", [(5, 5, [5]), (4, -1, [2]), (1, 1, [])])
def test_integer_resolvent_roots_examples(c, d, roots):
    T = Trinomial(c, d)
    assert integer_resolvent_roots(T) == roots
    assert resolvent_roots_by_divisors(T) == roots


def test_integer_resolvent_roots_oracle_on_box():
    # bisection route vs the rational-root-theorem divisor scan
    for c in range(-40, 41):
        for d in range(-60, 61):
            if c and d:
                T = Trinomial(c, d)
                assert sorted(set(integer_resolvent_roots(T))) == resolvent_roots_by_divisors(T), T


def test_double_root_reported_twice():
    # 3t^2 = 4d at t = -2, d = 3, and c^2 = t(t^2 - 4d) = 16
    T = Trinomial(4, 3)
    assert discriminant(T) == 0
    assert integer_resolvent_roots(T) == [-2, -2, 4]


@given(nonzero, nonzero)
def test_resolvent_root_identities(c, d):
    T = Trinomial(c, d)
    for t in integer_resolvent_roots(T):
        assert t * (t * t - 4 * d) == c * c
        assert discriminant(T) == (16 * d - 3 * t * t) * (3 * t * t - 4 * d) ** 2


@given(st.integers(min_value=-200, max_value=200).filter(bool), st.integers(min_value=-200, max_value=200),
       st.integers(min_value=-10**6, max_value=10**6))
def test_integer_cubic_roots_against_constructed(r1, r2, k):
    # (y - r1)(y - r2)(y - r3) with a third root r3; all must come back
    r3 = k % 997 - 498
    A, B, C = -(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -r1 * r2 * r3
    assert integer_cubic_roots(A, B, C) == sorted({r1, r2, r3})


def test_irreducible_examples():
    v = is_irreducible(Trinomial(-4, 3))  # (x - 1)^2 (x^2 + 2x + 3): also inseparable
    assert not v.irreducible and not v.separable
    assert v.witness == [[1, -2, 1], [3, 2, 1]]
    assert v.witness_str() == "(x^2 - 2*x + 1)(x^2 + 2*x + 3)"
    assert poly_mul(*v.witness) == Trinomial(-4, 3).poly()
    assert is_irreducible(Trinomial(5, 5)).irreducible
    assert is_irreducible(Trinomial(4, -1)).irreducible


def test_inseparable_reported():
    v = is_irreducible(Trinomial(4, 3))  # (x + 1)^2 (x^2 - 2x + 3)
    assert not v.separable and not v.irreducible
    assert poly_mul(*v.witness) == Trinomial(4, 3).poly()


def test_linear_factor_witness():
    T = Trinomial(-2, 1)  # x = 1 is a root, cofactor has no rational quadratic split
    v = is_irreducible(T)
    assert not v.irreducible
    assert poly_mul(*v.witness) == T.poly()


def test_irreducibility_matches_sympy_on_box():
    for c in range(-50, 51):
        for d in range(-50, 51):
            if not (c and d):
                continue
            T = Trinomial(c, d)
            v = is_irreducible(T)
            assert v.irreducible == Poly(x**4 + c * x + d, x, domain=ZZ).is_irreducible, T
            if v.witness is not None:
                assert poly_mul(*v.witness) == T.poly()


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_irreducible_mod_p_implies_irreducible(p):
    for c in range(-30, 31):
        for d in range(-30, 31):
            if c and d and (256 * d**3 - 27 * c**4) % p:
                f = polymod.reduce(Trinomial(c, d).poly(), p)
                if polymod.frobenius_degree_counts(f, p) == [0, 0, 0, 1]:
                    assert is_irreducible(Trinomial(c, d)).irreducible


def test_square_root_split_sign_corrected():
    T = Trinomial(-4, 3)
    assert 4 in integer_resolvent_roots(T)
    g, h = split_from_square_root(T, 4)
    assert (g, h) == ([1, -2, 1], [3, 2, 1])


def test_square_roots_force_reducibility_on_box():
    seen = 0
    for c in range(-60, 61):
        for d in range(-60, 61):
            if not (c and d):
                continue
            T = Trinomial(c, d)
            for t in set(integer_resolvent_roots(T)):
                if is_nonzero_square(t) and is_nonzero_square(t * t - 4 * d):
                    seen += 1
                    assert not is_irreducible(T).irreducible
                    g, h = split_from_square_root(T, t)
                    assert poly_mul(g, h) == T.poly()
    assert seen > 5
