"""
Dense polynomial arithmetic over the prime field F_q.

Polynomials are lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

Poly = list[int]


def trim(f: Poly) -> Poly:
    while f and f[-1] == 0:
        f.pop()
    return f


def reduce(coeffs, q: int) -> Poly:
    return trim([c % q for c in coeffs])


def deg(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, q: int) -> Poly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % q for i in range(n)])


def sub(f: Poly, g: Poly, q: int) -> Poly:
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % q for i in range(n)])


def mul(f: Poly, g: Poly, q: int) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce(out, q)


def divmod_(f: Poly, g: Poly, q: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    inv = pow(g[-1], -1, q)
    dq = len(r) - len(g)
    if dq < 0:
        return [], r
    quot = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        coef = r[k + len(g) - 1] * inv % q
        quot[k] = coef
        if coef:
            for j, b in enumerate(g):
                r[k + j] = (r[k + j] - coef * b) % q
    return trim(quot), trim(r[: len(g) - 1])


def monic(f: Poly, q: int) -> Poly:
    if not f:
        return []
    inv = pow(f[-1], -1, q)
    return [c * inv % q for c in f]


def gcd(f: Poly, g: Poly, q: int) -> Poly:
    """Monic gcd (``[]`` only when both inputs are zero)."""
    while g:
        f, g = g, divmod_(f, g, q)[1]
    return monic(f, q)


def derivative(f: Poly, q: int) -> Poly:
    return trim([i * c % q for i, c in enumerate(f)][1:])


def powmod(base: Poly, e: int, modulus: Poly, q: int) -> Poly:
    result: Poly = [1] if deg(modulus) > 0 else []
    b = divmod_(base, modulus, q)[1]
    while e:
        if e & 1:
            result = divmod_(mul(result, b, q), modulus, q)[1]
        e >>= 1
        if e:
            b = divmod_(mul(b, b, q), modulus, q)[1]
    return result


def evaluate(f: Poly, x: int, q: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % q
    return acc


def frobenius_degree_counts(f: Poly, q: int) -> list[int]:
    """Distinct-degree split of a squarefree monic f of degree <= 4.

    Returns the number of irreducible factors of each degree 1..deg f.
    """
    x = [0, 1]
    counts = [0] * (deg(f) + 1)
    rest = f
    h = x
    for k in range(1, deg(f) + 1):
        if deg(rest) < 2 * k:
            if deg(rest) >= 1:
                counts[deg(rest)] += 1
            break
        h = powmod(h, q, rest, q)
        g = gcd(rest, sub(h, x, q), q)
        if deg(g) > 0:
            counts[k] += deg(g) // k
            rest = divmod_(rest, g, q)[0]
            h = divmod_(h, rest, q)[1] if deg(rest) > 0 else []
        if deg(rest) <= 0:
            break
    return counts[1:]


def _monic_polys(degree: int, q: int):
    """Every monic polynomial of the given degree over F_q."""
    total = q**degree
    for n in range(total):
        coeffs = []
        for _ in range(degree):
            coeffs.append(n % q)
            n //= q
        yield coeffs + [1]


def factor_exhaustive(f: Poly, q: int) -> list[tuple[Poly, int]]:
    """Factor monic f (degree <= 4) by trial division with every monic
    polynomial of degree 1 and 2 over F_q.  Only sensible for small q.
    """
    out = []
    rest = monic(f, q)
    for d in (1, 2):
        for g in _monic_polys(d, q):
            if deg(rest) < d:
                break
            e = 0
            while deg(rest) >= d:
                quot, rem = divmod_(rest, g, q)
                if rem:
                    break
                rest = quot
                e += 1
            if e:
                out.append((g, e))
    if deg(rest) > 0:
        out.append((rest, 1))
    return out
