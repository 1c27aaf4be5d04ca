"""
Exhaustive sweeps over coefficient boxes and the proof-support suites.

Families:
  linear       x^4 + c x + d
  biquadratic  x^4 + b x^2 + d
  cubic        x^4 + a x^3 + d
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .arith import DEFAULT_BUDGET, FactorBudget, factorize
from .galois import GROUPS, classify_irreducible
from .monogenic import dedekind_check, dedekind_monogenic, is_monogenic, jks_prime_check
from .quartic import Quartic, discriminant as quartic_discriminant, factor_witness, galois_group
from .report import ClassificationReport, classify_quartic, classify_trinomial
from .trinomial import Trinomial, discriminant, integer_resolvent_roots, is_irreducible

log = logging.getLogger(__name__)

FAMILIES = ("linear", "biquadratic", "cubic")


class VerificationFailure(AssertionError):
    """An identity or table check failed; carries the counterexample."""

    def __init__(self, message: str, counterexample):
        super().__init__(f"{message}: {counterexample!r}")
        self.counterexample = counterexample


def embed(family: str, x: int, d: int) -> Quartic:
    if family == "linear":
        return (0, 0, x, d)
    if family == "biquadratic":
        return (0, x, 0, d)
    if family == "cubic":
        return (x, 0, 0, d)
    raise ValueError(f"unknown family {family!r}")


def canonical_range(bound: int) -> list[int]:
    """-1, 1, -2, 2, ..., -bound, bound."""
    return [s * m for m in range(1, bound + 1) for s in (-1, 1)]


@dataclass
class SweepResult:
    family: str
    bounds: tuple[int, int]
    hits: list[ClassificationReport] = field(default_factory=list)
    scanned: int = 0
    skipped_unknown: int = 0
    reducible: int = 0
    inseparable: int = 0
    group_counts: dict[str, int] = field(default_factory=lambda: {g: 0 for g in GROUPS})
    # every C4 member found, with its monogenicity status
    c4_members: list[tuple[Quartic, str]] = field(default_factory=list)
    unknown_members: list[Quartic] = field(default_factory=list)

    def merge(self, other: "SweepResult") -> None:
        self.hits += other.hits
        self.scanned += other.scanned
        self.skipped_unknown += other.skipped_unknown
        self.reducible += other.reducible
        self.inseparable += other.inseparable
        for g, n in other.group_counts.items():
            self.group_counts[g] += n
        self.c4_members += other.c4_members
        self.unknown_members += other.unknown_members

    @property
    def expected_scanned(self) -> int:
        return (2 * self.bounds[0]) * (2 * self.bounds[1])

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "bounds": list(self.bounds),
            "scanned": self.scanned,
            "reducible": self.reducible,
            "inseparable": self.inseparable,
            "group_counts": dict(self.group_counts),
            "c4_count": len(self.c4_members),
            "c4_monogenic_statuses": dict(sorted(Counter(s for _, s in self.c4_members).items())),
            "skipped_unknown": self.skipped_unknown,
            "unknown_members": [list(q) for q in self.unknown_members],
            "hits": [h.to_dict() for h in self.hits],
        }


def _sweep_rows(family: str, rows: list[int], bound_d: int, budget: FactorBudget) -> SweepResult:
    res = SweepResult(family, (0, bound_d))
    ds = canonical_range(bound_d)
    for x in rows:
        for d in ds:
            res.scanned += 1
            coeffs = embed(family, x, d)
            if family == "linear":
                T = Trinomial(x, d)
                iv = is_irreducible(T)
                if not iv.separable:
                    res.inseparable += 1
                    continue
                if not iv.irreducible:
                    res.reducible += 1
                    continue
                group = classify_irreducible(T).group
            else:
                if quartic_discriminant(coeffs) == 0:
                    res.inseparable += 1
                    continue
                if factor_witness(coeffs) is not None:
                    res.reducible += 1
                    continue
                group = galois_group(coeffs)[0]
            res.group_counts[group] += 1
            if group != "C4":
                continue
            if family == "linear":
                status = is_monogenic(T, budget).status
            else:
                status = dedekind_monogenic(coeffs, budget).status
            res.c4_members.append((coeffs, status))
            if status == "unknown":
                res.skipped_unknown += 1
                res.unknown_members.append(coeffs)
            elif status == "monogenic":
                if family == "linear":
                    rep = classify_trinomial(T, budget)
                else:
                    rep = classify_quartic(family, coeffs, budget)
                res.hits.append(rep)
    return res


def _chunks(items: list[int], n: int) -> list[list[int]]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def default_workers() -> int:
    return max(1, int(os.environ.get("QTLAB_WORKERS", "1")))


def sweep(
    family: str,
    bound_first: int,
    bound_d: int,
    budget: FactorBudget = DEFAULT_BUDGET,
    workers: int | None = None,
    on_part: Callable[[SweepResult], None] | None = None,
) -> SweepResult:
    """Scan every pair (x, d) with 0 < |x| <= bound_first, 0 < |d| <= bound_d,
    where x is c, b or a according to the family.

    ``on_part`` sees each partial result in canonical order as it completes.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if bound_first < 1 or bound_d < 1:
        raise ValueError("bounds must be positive")
    workers = workers or default_workers()
    rows = canonical_range(bound_first)
    # several chunks per worker so the large-|x| rows spread out
    chunks = _chunks(rows, workers * 4)
    result = SweepResult(family, (bound_first, bound_d))
    n = len(chunks)
    if workers == 1:
        parts = (_sweep_rows(family, ch, bound_d, budget) for ch in chunks)
        _collect(result, parts, on_part)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_sweep_rows, [family] * n, chunks, [bound_d] * n, [budget] * n)
            _collect(result, parts, on_part)
    assert result.scanned == result.expected_scanned
    for hit in result.hits:
        _recheck_hit(hit, budget)
    if result.skipped_unknown:
        log.warning("%d C4 members of unknown monogenicity in %s sweep", result.skipped_unknown, family)
    return result


def _collect(result: SweepResult, parts, on_part) -> None:
    for part in parts:
        result.merge(part)
        if on_part is not None:
            on_part(part)


def _recheck_hit(hit: ClassificationReport, budget: FactorBudget) -> None:
    """Hits must survive both the Dedekind oracle and (for trinomials) JKS."""
    coeffs = hit.coeffs
    if hit.group != "C4" or hit.monogenic_status != "monogenic":
        raise VerificationFailure("hit is not C4 and monogenic", coeffs)
    if dedekind_monogenic(coeffs, budget).status != "monogenic":
        raise VerificationFailure("hit fails the Dedekind oracle", coeffs)
    if hit.family == "linear":
        T = Trinomial(coeffs[2], coeffs[3])
        if not all(jks_prime_check(T, q).passes for q in factorize(discriminant(T), budget).primes):
            raise VerificationFailure("hit fails a JKS condition", coeffs)


def _box(bound: int):
    for c in canonical_range(bound):
        for d in canonical_range(bound):
            yield Trinomial(c, d)


def verify_identities(bound: int) -> dict:
    """Check, at every integer resolvent root t,
    t(t^2-4d) = c^2, Delta = (16d-3t^2)(3t^2-4d)^2 and
    delta1*delta2 = c^2 (16d-3t^2)^2."""
    instances = 0
    for T in _box(bound):
        c, d = T.c, T.d
        disc = discriminant(T)
        for t in sorted(set(integer_resolvent_roots(T))):
            instances += 1
            w = 16 * d - 3 * t * t
            if t * (t * t - 4 * d) != c * c:
                raise VerificationFailure("t(t^2-4d) != c^2", (c, d, t))
            if disc != w * (3 * t * t - 4 * d) ** 2:
                raise VerificationFailure("discriminant factorization fails", (c, d, t))
            if (t * w) * ((t * t - 4 * d) * w) != c * c * w * w:
                raise VerificationFailure("delta1*delta2 != c^2 (16d-3t^2)^2", (c, d, t))
    return {"suite": "identities", "bound": bound, "instances": instances, "failures": 0}


MOD9_TABLE = frozenset({(2, 6), (4, 3), (5, 3), (7, 6)})


def verify_mod9_table() -> set[tuple[int, int]]:
    """Residues (c mod 9, d mod 9) with 3 not dividing c, 3 || d, and some t
    with t(t^2-4d) = c^2 (mod 9)."""
    found = set()
    for c in range(9):
        if c % 3 == 0:
            continue
        for d in (3, 6):
            if any((t * (t * t - 4 * d) - c * c) % 9 == 0 for t in range(9)):
                found.add((c, d))
    if found != MOD9_TABLE:
        raise VerificationFailure("residue table mismatch", sorted(found ^ MOD9_TABLE))
    for c, d in found:
        if (c**4 - c * c + d) % 9:
            raise VerificationFailure("c^4 - c^2 + d != 0 mod 9", (c, d))
        c1, d2 = (c - c**3) // 3, d // 3
        # the failing index condition at q = 3 needs 3 !| c1 and 3 | c*c1^3 - d2^3
        if c1 % 3 == 0 or (c * c1**3 - d2**3) % 3:
            raise VerificationFailure("c*c1^3 - d2^3 != 0 mod 3", (c, d))
    return found


def parity_observations_check(bound: int) -> dict:
    """2 | Delta <=> 4 | (3t^2-4d) <=> 4 | (16d-3t^2) <=> 2 | t, and
    3 | Delta <=> 3 | (3t^2-4d) <=> 3 | (16d-3t^2) <=> 3 | d."""
    instances = 0
    for T in _box(bound):
        c, d = T.c, T.d
        disc = discriminant(T)
        for t in sorted(set(integer_resolvent_roots(T))):
            instances += 1
            u, w = 3 * t * t - 4 * d, 16 * d - 3 * t * t
            two = (disc % 2 == 0, u % 4 == 0, w % 4 == 0, t % 2 == 0)
            three = (disc % 3 == 0, u % 3 == 0, w % 3 == 0, d % 3 == 0)
            if len(set(two)) != 1:
                raise VerificationFailure("2-adic chain broken", (c, d, t, two))
            if len(set(three)) != 1:
                raise VerificationFailure("3-adic chain broken", (c, d, t, three))
    return {"suite": "parity", "bound": bound, "instances": instances, "failures": 0}


def jks_dedekind_agreement(bound: int, qmax: int = 10**5) -> dict:
    """Compare the JKS conditions with the Dedekind criterion at every prime
    q <= qmax of the discriminant of every irreducible trinomial in the box."""
    checks = trinomials = 0
    mismatches = []
    for T in _box(bound):
        if not is_irreducible(T).irreducible:
            continue
        trinomials += 1
        for q in factorize(discriminant(T)).primes:
            if q > qmax:
                continue
            checks += 1
            if jks_prime_check(T, q).passes != dedekind_check(T.coeffs, q):
                mismatches.append((T.c, T.d, q))
    return {
        "suite": "jks-vs-dedekind",
        "bound": bound,
        "qmax": qmax,
        "trinomials": trinomials,
        "checks": checks,
        "mismatches": mismatches,
        "failures": len(mismatches),
    }
