"""
Monogenicity of x^4 + c x + d, prime by prime over the discriminant.

``jks_prime_check`` applies the four trinomial index conditions (which
one depends on whether q divides c and/or d).  ``dedekind_check`` is the
classical Dedekind criterion for any monic quartic and serves as an
independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import polymod
from .arith import DEFAULT_BUDGET, FactorBudget, FactoredInteger, IncompleteFactorization, factorize, is_prime
from .galois import PreconditionError
from .quartic import Quartic, as_poly, discriminant as quartic_discriminant, is_irreducible as quartic_irreducible
from .trinomial import Trinomial, discriminant, is_irreducible

CASES = ("both_divide", "c_only", "d_only", "neither")

# Below this, factor mod q by trial division over all monic linears and quadratics.
EXHAUSTIVE_FACTOR_LIMIT = 50


@dataclass(frozen=True)
class JksPrimeCheck:
    q: int
    case: str
    passes: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"q": self.q, "case": self.case, "passes": self.passes, "detail": dict(self.detail)}


@dataclass(frozen=True)
class MonogenicityVerdict:
    status: str  # monogenic | not_monogenic | unknown
    failing_primes: tuple[int, ...]
    discriminant: FactoredInteger
    checks: tuple[JksPrimeCheck, ...] = ()

    def __post_init__(self):
        if self.status == "monogenic":
            assert not self.failing_primes and self.discriminant.complete
        if self.status == "unknown":
            assert not self.discriminant.complete

    @property
    def monogenic(self) -> bool:
        return self.status == "monogenic"


def jks_prime_check(T: Trinomial, q: int) -> JksPrimeCheck:
    c, d = T.c, T.d
    delta = discriminant(T)
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    if delta % q:
        raise PreconditionError(f"{q} does not divide the discriminant {delta} of {T}")
    qc, qd = c % q == 0, d % q == 0
    if qc and qd:
        passes = d % (q * q) != 0
        return JksPrimeCheck(q, "both_divide", passes, {"q2_divides_d": not passes})
    if qc:
        j = 2 if q == 2 else 0  # q^j || 4
        c2 = c // q
        d1 = (d + (-d) ** (q**j)) // q
        passes = (c2 % q == 0 and d1 % q != 0) or (c2 * (d * c2**4 + d1**4)) % q != 0
        return JksPrimeCheck(q, "c_only", passes, {"j": j, "c2": c2, "d1": d1})
    if qd:
        ell = 1 if q == 3 else 0  # q^ell || 3
        c1 = (c + (-c) ** (q**ell)) // q
        d2 = d // q
        passes = (c1 % q == 0 and d2 % q != 0) or (c1 * (c * c1**3 - d2**3)) % q != 0
        return JksPrimeCheck(q, "d_only", passes, {"ell": ell, "c1": c1, "d2": d2})
    passes = delta % (q * q) != 0
    return JksPrimeCheck(q, "neither", passes, {"q2_divides_discriminant": not passes})


def _require_irreducible(T: Trinomial) -> None:
    v = is_irreducible(T)
    if not v.separable:
        raise PreconditionError(f"{T} is not separable")
    if not v.irreducible:
        raise PreconditionError(f"{T} is reducible")


def is_monogenic(T: Trinomial, budget: FactorBudget = DEFAULT_BUDGET) -> MonogenicityVerdict:
    _require_irreducible(T)
    fac = factorize(discriminant(T), budget)
    checks = tuple(jks_prime_check(T, q) for q in fac.primes)
    failing = tuple(ch.q for ch in checks if not ch.passes)
    if failing:
        status = "not_monogenic"
    elif fac.complete:
        status = "monogenic"
    else:
        status = "unknown"
    return MonogenicityVerdict(status, failing, fac, checks)


def index_divisor_primes(T: Trinomial, budget: FactorBudget = DEFAULT_BUDGET) -> set[int]:
    v = is_monogenic(T, budget)
    if not v.discriminant.complete:
        raise IncompleteFactorization(v.discriminant)
    return set(v.failing_primes)


def _split_multiplicities(f: polymod.Poly, q: int) -> tuple[polymod.Poly, polymod.Poly]:
    """(G, H) over F_q with G the product of the distinct irreducible factors
    of f and H = f / G."""
    if q < EXHAUSTIVE_FACTOR_LIMIT:
        G, H = [1], [1]
        for g, e in polymod.factor_exhaustive(f, q):
            G = polymod.mul(G, g, q)
            for _ in range(e - 1):
                H = polymod.mul(H, g, q)
        return G, H
    # multiplicities are at most 4 < q, so gcd(f, f') = prod g_i^(e_i - 1)
    H = polymod.gcd(f, polymod.derivative(f, q), q)
    G, rem = polymod.divmod_(f, H, q)
    assert not rem
    return G, H


def dedekind_check(coeffs: Quartic | list[int], q: int) -> bool:
    """True iff q does not divide [Z_K : Z[theta]] for a root theta of the
    monic quartic (given as (a, b, c, d) or low-first coefficient list)."""
    if not is_prime(q):
        raise PreconditionError(f"{q} is not prime")
    f = as_poly(coeffs) if isinstance(coeffs, tuple) else list(coeffs)
    if len(f) != 5 or f[-1] != 1:
        raise PreconditionError("dedekind_check needs a monic quartic")
    fbar = polymod.reduce(f, q)
    G, H = _split_multiplicities(fbar, q)
    if polymod.deg(H) == 0:
        return True  # squarefree mod q
    gh = [0] * 5
    for i, x in enumerate(G):
        for j, y in enumerate(H):
            gh[i + j] += x * y
    diff = [a - b for a, b in zip(gh, f)]
    assert all(x % q == 0 for x in diff)
    F = polymod.reduce([x // q for x in diff], q)
    return polymod.deg(polymod.gcd(F, H, q)) == 0


def dedekind_monogenic(coeffs: Quartic, budget: FactorBudget = DEFAULT_BUDGET) -> MonogenicityVerdict:
    """Monogenicity of any irreducible monic quartic via Dedekind at every
    prime of the discriminant."""
    if not quartic_irreducible(coeffs):
        raise PreconditionError(f"{coeffs} is reducible")
    disc = quartic_discriminant(coeffs)
    if disc == 0:
        raise PreconditionError(f"{coeffs} is not separable")
    fac = factorize(disc, budget)
    failing = tuple(q for q in fac.primes if not dedekind_check(coeffs, q))
    if failing:
        status = "not_monogenic"
    elif fac.complete:
        status = "monogenic"
    else:
        status = "unknown"
    return MonogenicityVerdict(status, failing, fac)
