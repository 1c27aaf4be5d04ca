"""
Galois group of an irreducible trinomial x^4 + c x + d.

The C4/D4 branch is decided by the two products

    delta1 = t (16d - 3t^2),   delta2 = (t^2 - 4d)(16d - 3t^2)

at the unique integer root t of the cubic resolvent: C4 exactly when
both are nonzero squares, D4 when neither is.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from . import polymod
from .arith import FactorBudget, DEFAULT_BUDGET, is_nonzero_square, is_perfect_square, is_prime, squarefree_part
from .quartic import Quartic, as_poly, discriminant as quartic_discriminant
from .trinomial import Trinomial, discriminant, integer_resolvent_roots, is_irreducible, resolvent

GROUPS = ("C4", "D4", "V4", "A4", "S4")
SHAPES = ("1+1+1+1", "1+1+2", "2+2", "1+3", "4")


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ResolventAnalysis:
    t: int
    delta1: int
    delta2: int
    delta1_is_nonzero_square: bool
    delta2_is_nonzero_square: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "delta1": self.delta1,
            "delta2": self.delta2,
            "delta1_is_nonzero_square": self.delta1_is_nonzero_square,
            "delta2_is_nonzero_square": self.delta2_is_nonzero_square,
        }


@dataclass(frozen=True)
class GaloisVerdict:
    group: str
    discriminant_is_square: bool
    # ResolventAnalysis for the C4/D4 branch, else the resolvent's integer roots
    witness: ResolventAnalysis | tuple[int, ...]

    def __post_init__(self):
        assert self.group in GROUPS
        if self.group == "A4":
            assert self.discriminant_is_square
        if self.group == "S4":
            assert not self.discriminant_is_square

    def witness_dict(self) -> dict:
        if isinstance(self.witness, ResolventAnalysis):
            return self.witness.to_dict()
        return {"resolvent_integer_roots": list(self.witness)}


def same_quadratic_field(A: int, B: int, budget: FactorBudget = DEFAULT_BUDGET) -> bool:
    """Whether Q(sqrt A) = Q(sqrt B) for nonsquare A, B."""
    if is_perfect_square(A) or is_perfect_square(B):
        raise PreconditionError(f"same_quadratic_field needs nonsquares, got {A}, {B}")
    return squarefree_part(A, budget) == squarefree_part(B, budget)


def resolvent_analysis(T: Trinomial, t: int) -> ResolventAnalysis:
    if resolvent(T)(t) != 0:
        raise PreconditionError(f"{t} is not a root of the resolvent of {T}")
    c, d = T.c, T.d
    w = 16 * d - 3 * t * t
    delta1 = t * w
    delta2 = (t * t - 4 * d) * w
    assert delta1 * delta2 == c * c * w * w
    return ResolventAnalysis(
        t=t,
        delta1=delta1,
        delta2=delta2,
        delta1_is_nonzero_square=is_nonzero_square(delta1),
        delta2_is_nonzero_square=is_nonzero_square(delta2),
    )


def classify_galois(T: Trinomial) -> GaloisVerdict:
    verdict = is_irreducible(T)
    if not verdict.separable:
        raise PreconditionError(f"{T} is not separable")
    if not verdict.irreducible:
        raise PreconditionError(f"{T} is reducible")
    return classify_irreducible(T)


def classify_irreducible(T: Trinomial) -> GaloisVerdict:
    disc = discriminant(T)
    square = is_perfect_square(disc)
    roots = integer_resolvent_roots(T)
    if not roots:
        return GaloisVerdict("A4" if square else "S4", square, ())
    if len(roots) == 3:
        return GaloisVerdict("V4", square, tuple(roots))
    if len(roots) != 1:
        # a third rational root would make the cubic split completely
        raise AssertionError(f"resolvent of {T} has roots {roots}")
    ra = resolvent_analysis(T, roots[0])
    if ra.delta1_is_nonzero_square != ra.delta2_is_nonzero_square:
        raise AssertionError(f"mixed delta squares for {T}: {ra}")
    return GaloisVerdict("C4" if ra.delta1_is_nonzero_square else "D4", square, ra)


def _shape(counts: list[int]) -> str:
    parts = []
    for degree, n in enumerate(counts, start=1):
        parts += [str(degree)] * n
    return "+".join(parts)


def frobenius_shape(poly: list[int], p: int) -> str:
    """Degree pattern of the factorization of a monic quartic mod p (p must
    not divide its discriminant)."""
    return _shape(polymod.frobenius_degree_counts(polymod.reduce(poly, p), p))


def _qualifying_primes(bad: int, count: int, seed: int, start: int = 100):
    if seed == 0:
        p = start
        while count:
            p += 1
            if is_prime(p) and bad % p:
                count -= 1
                yield p
        return
    rng = random.Random(seed)
    seen = set()
    while count:
        n = rng.randrange(start, 100 * start + 1000 * count)
        while not is_prime(n):
            n += 1
        if n in seen or bad % n == 0:
            continue
        seen.add(n)
        count -= 1
        yield n


def frobenius_pattern_sample(
    T: Trinomial | Quartic, prime_count: int, seed: int = 0
) -> dict[str, int]:
    """Histogram of factorization shapes of f mod p over prime_count primes
    not dividing disc*c*d (the first ones above 100 when seed == 0)."""
    if isinstance(T, Trinomial):
        poly, bad = T.poly(), discriminant(T) * T.c * T.d
    else:
        poly = as_poly(T)
        bad = quartic_discriminant(T) * (T[3] or 1)
    if bad == 0:
        raise PreconditionError("polynomial is not separable")
    hist = Counter({s: 0 for s in SHAPES})
    for p in _qualifying_primes(bad, prime_count, seed):
        hist[frobenius_shape(poly, p)] += 1
    return dict(hist)
