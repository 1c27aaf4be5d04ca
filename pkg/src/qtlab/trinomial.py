"""
The trinomial x^4 + c x + d: discriminant, cubic resolvent, and exact
irreducibility over Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import is_perfect_square, signed_divisors
from .quartic import format_poly, integer_cubic_roots, poly_mul


@dataclass(frozen=True, order=True)
class Trinomial:
    c: int
    d: int

    def __post_init__(self):
        if self.c == 0 or self.d == 0:
            raise ValueError(f"trinomial needs c*d != 0, got c={self.c}, d={self.d}")

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        """As a general quartic (a, b, c, d)."""
        return (0, 0, self.c, self.d)

    def poly(self) -> list[int]:
        return [self.d, self.c, 0, 0, 1]

    def __call__(self, x: int) -> int:
        return x**4 + self.c * x + self.d

    def __str__(self) -> str:
        return format_poly(self.poly())


@dataclass(frozen=True)
class ResolventCubic:
    """r(x) = x^3 + d4*x + c2, i.e. d4 = -4d and c2 = -c^2."""

    d4: int
    c2: int

    def __call__(self, x: int) -> int:
        return x**3 + self.d4 * x + self.c2

    def discriminant(self) -> int:
        # generic x^3 + p x + q
        return -4 * self.d4**3 - 27 * self.c2**2

    def poly(self) -> list[int]:
        return [self.c2, self.d4, 0, 1]

    def __str__(self) -> str:
        return format_poly(self.poly())


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    separable: bool
    witness: list[list[int]] | None = field(default=None)

    def witness_str(self) -> str | None:
        if self.witness is None:
            return None
        return "".join(f"({format_poly(g)})" for g in self.witness)


def discriminant(T: Trinomial) -> int:
    return 256 * T.d**3 - 27 * T.c**4


def resolvent(T: Trinomial) -> ResolventCubic:
    r = ResolventCubic(d4=-4 * T.d, c2=-T.c * T.c)
    assert r.discriminant() == discriminant(T)
    return r


def integer_resolvent_roots(T: Trinomial) -> list[int]:
    """Integer roots t of x^3 - 4d x - c^2, ascending; a double root
    (only possible when the discriminant vanishes) is listed twice."""
    roots = integer_cubic_roots(0, -4 * T.d, -T.c * T.c)
    out = []
    for t in roots:
        out.append(t)
        if 3 * t * t == 4 * T.d:  # r'(t) = 0; r''(t) = 6t != 0 since c != 0
            out.append(t)
    return out


def resolvent_roots_by_divisors(T: Trinomial) -> list[int]:
    """Rational-root-theorem scan over the divisors of c^2 (slow reference)."""
    r = resolvent(T)
    return [t for t in signed_divisors(T.c * T.c) if r(t) == 0]


def quadratic_split(T: Trinomial) -> tuple[list[int], list[int]] | None:
    """A factorization (x^2 + a x + b)(x^2 - a x + e) of T over Z, if any."""
    for b in signed_divisors(T.d):
        e = T.d // b
        s = b + e
        if s <= 0 or not is_perfect_square(s):
            continue
        r = math.isqrt(s)
        for a in (-r, r):
            if a * (e - b) == T.c:
                return [b, a, 1], [e, -a, 1]
    return None


def split_from_square_root(T: Trinomial, t: int) -> tuple[list[int], list[int]]:
    """The split forced when t and t^2 - 4d are both nonzero squares:
    (x^2 - s x + b1)(x^2 + s x + b2) with s^2 = t, b1 + b2 = t and
    s*(b1 - b2) = c.
    """
    s = math.isqrt(t)
    if t <= 0 or s * s != t or not is_perfect_square(t * t - 4 * T.d) or T.c % s:
        raise ValueError(f"no square-root split of {T} at t={t}")
    diff = T.c // s
    if (t + diff) % 2:
        raise ValueError(f"square-root split of {T} at t={t} is not integral")
    b1 = (t + diff) // 2
    b2 = t - b1
    g, h = [b1, -s, 1], [b2, s, 1]
    if poly_mul(g, h) != T.poly():
        raise AssertionError(f"square-root split of {T} does not re-expand")
    return g, h


def is_irreducible(T: Trinomial) -> IrreducibilityVerdict:
    separable = discriminant(T) != 0
    split = quadratic_split(T)
    if split is not None:
        return IrreducibilityVerdict(False, separable, [split[0], split[1]])
    for x in signed_divisors(T.d):
        if T(x) == 0:
            cubic = [x**3 + T.c, x * x, x, 1]
            return IrreducibilityVerdict(False, separable, [[-x, 1], cubic])
    # Delta = 0 would force a repeated root and hence a factor found above.
    assert separable, T
    return IrreducibilityVerdict(True, True, None)
