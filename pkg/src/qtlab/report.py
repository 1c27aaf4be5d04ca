"""Full classification reports for single polynomials."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .arith import DEFAULT_BUDGET, FactorBudget, FactoredInteger, factorize
from .galois import classify_irreducible
from .monogenic import dedekind_monogenic, is_monogenic
from .quartic import Quartic, as_poly, factor_witness, format_poly, galois_group, discriminant as quartic_discriminant
from .trinomial import Trinomial, discriminant, is_irreducible


@dataclass
class ClassificationReport:
    family: str
    coeffs: Quartic
    irreducible: bool
    separable: bool
    witness: list[list[int]] | None
    discriminant: FactoredInteger | None
    group: str | None = None
    galois_witness: dict | None = None
    monogenic_status: str | None = None
    failing_primes: tuple[int, ...] = ()
    timing_ms: float | None = None

    @property
    def polynomial(self) -> str:
        return format_poly(as_poly(self.coeffs))

    def to_dict(self, timing: bool = False) -> dict:
        a, b, c, d = self.coeffs
        return {
            "input": {"family": self.family, "polynomial": self.polynomial, "a": a, "b": b, "c": c, "d": d},
            "irreducible": self.irreducible,
            "separable": self.separable,
            "witness": None if self.witness is None else [format_poly(g) for g in self.witness],
            "discriminant": None if self.discriminant is None else self.discriminant.to_dict(),
            "galois": {"group": self.group, "witness": self.galois_witness},
            "monogenic": {"status": self.monogenic_status, "failing_primes": list(self.failing_primes)},
            "timing_ms": round(self.timing_ms, 3) if timing and self.timing_ms is not None else None,
        }


def classify_trinomial(T: Trinomial, budget: FactorBudget = DEFAULT_BUDGET) -> ClassificationReport:
    start = time.perf_counter()
    iv = is_irreducible(T)
    disc = discriminant(T)
    rep = ClassificationReport(
        family="linear",
        coeffs=T.coeffs,
        irreducible=iv.irreducible,
        separable=iv.separable,
        witness=iv.witness,
        discriminant=factorize(disc, budget) if disc else None,
    )
    if iv.irreducible:
        gv = classify_irreducible(T)
        rep.group = gv.group
        rep.galois_witness = gv.witness_dict() | {"discriminant_is_square": gv.discriminant_is_square}
        mv = is_monogenic(T, budget)
        rep.monogenic_status = mv.status
        rep.failing_primes = mv.failing_primes
    rep.timing_ms = (time.perf_counter() - start) * 1000
    return rep


def classify_quartic(family: str, coeffs: Quartic, budget: FactorBudget = DEFAULT_BUDGET) -> ClassificationReport:
    """Report for a general monic quartic; monogenicity by the Dedekind criterion."""
    start = time.perf_counter()
    disc = quartic_discriminant(coeffs)
    w = factor_witness(coeffs)
    rep = ClassificationReport(
        family=family,
        coeffs=coeffs,
        irreducible=w is None,
        separable=disc != 0,
        witness=w,
        discriminant=factorize(disc, budget) if disc else None,
    )
    if w is None:
        rep.group, rep.galois_witness = galois_group(coeffs)
        mv = dedekind_monogenic(coeffs, budget)
        rep.monogenic_status = mv.status
        rep.failing_primes = mv.failing_primes
    rep.timing_ms = (time.perf_counter() - start) * 1000
    return rep
