"""
General monic integer quartics x^4 + a x^3 + b x^2 + c x + d.

Coefficient tuples are ``(a, b, c, d)``; integer polynomials elsewhere
are lists of coefficients, lowest degree first.
"""

from __future__ import annotations

import math

from .arith import is_perfect_square, signed_divisors

Quartic = tuple[int, int, int, int]


def as_poly(q: Quartic) -> list[int]:
    a, b, c, d = q
    return [d, c, b, a, 1]


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def format_poly(f: list[int], var: str = "x") -> str:
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def discriminant(q: Quartic) -> int:
    a, b, c, d = q
    return (
        256 * d**3 - 192 * a * c * d**2 - 128 * b**2 * d**2 + 144 * b * c**2 * d
        - 27 * c**4 + 144 * a**2 * b * d**2 - 6 * a**2 * c**2 * d - 80 * a * b**2 * c * d
        + 18 * a * b * c**3 + 16 * b**4 * d - 4 * b**3 * c**2 - 27 * a**4 * d**2
        + 18 * a**3 * b * c * d - 4 * a**3 * c**3 - 4 * a**2 * b**3 * d + a**2 * b**2 * c**2
    )


def resolvent_cubic(q: Quartic) -> tuple[int, int, int]:
    """(A, B, C) with y^3 + A y^2 + B y + C vanishing at a1a2+a3a4 etc."""
    a, b, c, d = q
    return -b, a * c - 4 * d, -(a * a * d - 4 * b * d + c * c)


def cubic_discriminant(A: int, B: int, C: int) -> int:
    return A * A * B * B - 4 * B**3 - 4 * A**3 * C - 27 * C * C + 18 * A * B * C


def _cubic(A: int, B: int, C: int, x: int) -> int:
    return ((x + A) * x + B) * x + C


def _increasing_zero(A: int, B: int, C: int, lo: int, hi: int, sign: int) -> int | None:
    """Integer zero of sign*p on [lo, hi], where sign*p is nondecreasing there."""
    if lo > hi:
        return None
    while lo < hi:
        mid = (lo + hi) // 2
        if sign * _cubic(A, B, C, mid) < 0:
            lo = mid + 1
        else:
            hi = mid
    return lo if _cubic(A, B, C, lo) == 0 else None


def integer_cubic_roots(A: int, B: int, C: int) -> list[int]:
    """Distinct integer roots of y^3 + A y^2 + B y + C, ascending.

    Bisection on the monotone pieces between the critical points; exact.
    """
    bound = 1 + max(abs(A), abs(B), abs(C))
    D = 4 * A * A - 12 * B  # discriminant of the derivative
    candidates: set[int] = set()
    if D <= 0:
        pieces = [(-bound, bound, 1)]
    else:
        s = math.isqrt(D)
        m1 = (-2 * A - s) // 6
        m2 = (-2 * A + s) // 6
        # True critical points lie within 1 of m1, m2; probe those windows directly.
        for m in (m1, m2):
            candidates.update(x for x in range(m - 2, m + 3) if _cubic(A, B, C, x) == 0)
        pieces = [(-bound, m1 - 3, 1), (m1 + 3, m2 - 3, -1), (m2 + 3, bound, 1)]
    for lo, hi, sign in pieces:
        z = _increasing_zero(A, B, C, lo, hi, sign)
        if z is not None:
            candidates.add(z)
    return sorted(x for x in candidates if -bound <= x <= bound)


def integer_roots_quartic(q: Quartic) -> list[int]:
    a, b, c, d = q
    if d == 0:
        return sorted({0, *integer_cubic_roots(a, b, c)})
    return [x for x in signed_divisors(d) if _quartic_at(q, x) == 0]


def _quartic_at(q: Quartic, x: int) -> int:
    a, b, c, d = q
    return (((x + a) * x + b) * x + c) * x + d


def quadratic_splits(q: Quartic) -> list[tuple[list[int], list[int]]]:
    """All factorizations (x^2+px+u)(x^2+rx+v) over Z, for d != 0."""
    a, b, c, d = q
    out = []
    for u in signed_divisors(d):
        v = d // u
        if v < u:
            continue  # each unordered {u, v} once; p is then free
        if v != u:
            for uu, vv in ((u, v), (v, u)):
                # p*vv + (a - p)*uu = c
                num = c - a * uu
                den = vv - uu
                if num % den:
                    continue
                p = num // den
                r = a - p
                if p * r + uu + vv == b:
                    out.append(([uu, p, 1], [vv, r, 1]))
        else:
            if c != a * u:
                continue
            disc = a * a - 4 * (b - 2 * u)
            if not is_perfect_square(disc):
                continue
            s = math.isqrt(disc)
            if (a + s) % 2:
                continue
            for p in {(a + s) // 2, (a - s) // 2}:
                out.append(([u, p, 1], [v, a - p, 1]))
    return out


def factor_witness(q: Quartic) -> list[list[int]] | None:
    """A nontrivial factorization of the quartic over Z, or None if irreducible.

    Quadratic splits are preferred over linear factors.
    """
    a, b, c, d = q
    if d == 0:
        return [[0, 1], [c, b, a, 1]]
    splits = quadratic_splits(q)
    if splits:
        g, h = splits[0]
        return [g, h]
    for x in signed_divisors(d):
        if _quartic_at(q, x) == 0:
            # synthetic division by (y - x)
            c3 = 1
            c2 = a + x
            c1 = b + x * c2
            c0 = c + x * c1
            return [[-x, 1], [c0, c1, c2, c3]]
    return None


def is_irreducible(q: Quartic) -> bool:
    return factor_witness(q) is None


def square_in_field(n: int, disc: int) -> bool:
    """Whether sqrt(n) lies in Q(sqrt(disc))."""
    return n == 0 or is_perfect_square(n) or is_perfect_square(n * disc)


def kappe_warren(q: Quartic, t: int, disc: int) -> str:
    """C4 or D4 for an irreducible quartic whose resolvent has the single
    rational root t: C4 exactly when (x^2 - t x + d)(x^2 + a x + b - t)
    splits over Q(sqrt(disc)).
    """
    a, b, c, d = q
    ok = square_in_field(t * t - 4 * d, disc) and square_in_field(a * a - 4 * (b - t), disc)
    return "C4" if ok else "D4"


def galois_group(q: Quartic) -> tuple[str, dict]:
    """Galois group of an irreducible separable quartic, with a witness dict."""
    disc = discriminant(q)
    if disc == 0:
        raise ValueError("quartic is not separable")
    if not is_irreducible(q):
        raise ValueError("quartic is reducible")
    roots = integer_cubic_roots(*resolvent_cubic(q))
    witness = {"resolvent": list(resolvent_cubic(q)), "resolvent_roots": roots}
    if not roots:
        return ("A4" if is_perfect_square(disc) else "S4"), witness
    if len(roots) == 3:
        return "V4", witness
    if len(roots) != 1:
        raise AssertionError(f"resolvent of {q} has exactly two rational roots: {roots}")
    return kappe_warren(q, roots[0], disc), witness


def depress(a: int, d: int) -> Quartic:
    """Integral depressed model of x^4 + a x^3 + d.

    Substituting x = (y - a)/4 and scaling by 256 gives
    y^4 + P y^2 + Q y + R with the same splitting field.
    """
    P = -6 * a * a
    Q = 8 * a**3
    R = 256 * d - 3 * a**4
    return (0, P, Q, R)
