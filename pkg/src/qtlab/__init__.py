"""Exact classification of quartic trinomials x^4 + c x + d."""

from .arith import (
    DomainError,
    FactorBudget,
    FactoredInteger,
    IncompleteFactorization,
    factorize,
    int_sqrt,
    is_perfect_square,
    is_prime,
    squarefree_part,
    valuation,
)
from .ec import ECPoint, ECSolutionSet, ec_expected_points, ec_point_to_coefficients, ec_points_bruteforce
from .galois import (
    GaloisVerdict,
    PreconditionError,
    ResolventAnalysis,
    classify_galois,
    frobenius_pattern_sample,
    resolvent_analysis,
    same_quadratic_field,
)
from .monogenic import (
    JksPrimeCheck,
    MonogenicityVerdict,
    dedekind_check,
    index_divisor_primes,
    is_monogenic,
    jks_prime_check,
)
from .report import ClassificationReport, classify_quartic, classify_trinomial
from .search import SweepResult, parity_observations_check, sweep, verify_identities, verify_mod9_table
from .trinomial import (
    IrreducibilityVerdict,
    ResolventCubic,
    Trinomial,
    discriminant,
    integer_resolvent_roots,
    is_irreducible,
    resolvent,
)

__version__ = "0.1.0"
