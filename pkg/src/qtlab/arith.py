"""
Exact integer utilities: square roots, valuations, primality and
budgeted factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class DomainError(ValueError):
    """Argument outside the domain of an arithmetic operation."""


class IncompleteFactorization(ArithmeticError):
    """A result needs a complete factorization that the budget did not reach."""

    def __init__(self, partial: "FactoredInteger"):
        super().__init__(
            f"factorization of {partial.value} incomplete; "
            f"unfactored cofactor {partial.unfactored_cofactor}"
        )
        self.partial = partial


@dataclass(frozen=True)
class FactorBudget:
    trial_division_bound: int = 10**6
    rho_cap: int = 10**7

    def __post_init__(self):
        if self.trial_division_bound < 2 or self.rho_cap < 1:
            raise DomainError("budget bounds must be positive")


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class FactoredInteger:
    value: int
    sign: int
    factors: tuple[tuple[int, int], ...]
    complete: bool
    unfactored_cofactor: int = 1
    # True when some listed prime exceeds the deterministic Miller-Rabin range.
    probable: bool = False

    def __post_init__(self):
        assert self.sign * math.prod(p**e for p, e in self.factors) * self.unfactored_cofactor == self.value
        assert self.complete == (self.unfactored_cofactor == 1)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "factors": [[p, e] for p, e in self.factors],
            "complete": self.complete,
            "unfactored_cofactor": self.unfactored_cofactor,
        }

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.unfactored_cofactor != 1:
            parts.append(f"({self.unfactored_cofactor})")
        body = "*".join(parts) or "1"
        return f"-{body}" if self.sign < 0 else body


def int_sqrt(n: int) -> int:
    if n < 0:
        raise DomainError(f"int_sqrt of negative number {n}")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    """True for 0 as well; callers wanting a nonzero square check ``n > 0``."""
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def is_nonzero_square(n: int) -> bool:
    return n > 0 and is_perfect_square(n)


def valuation(n: int, q: int) -> tuple[int, int]:
    """Return ``(k, m)`` with ``q**k`` exactly dividing ``n`` and ``m = n // q**k``."""
    if n == 0:
        raise DomainError("valuation of zero is undefined")
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k, n


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# The first 12 prime bases are deterministic below this bound.
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24, probable above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _SMALL_PRIMES if n < MR_DETERMINISTIC_LIMIT else _SMALL_PRIMES + (41, 43, 47, 53, 59, 61, 67, 71)
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=4)
def primes_up_to(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=4)
def _prime_blocks(bound: int, size: int = 256) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Primes up to bound in blocks, each with the product of its primes."""
    ps = primes_up_to(bound)
    return tuple((ps[i : i + size], math.prod(ps[i : i + size])) for i in range(0, len(ps), size))


def _brent(n: int, cap: int, seed: int) -> int | None:
    """One Pollard-Brent run; a nontrivial factor of odd composite n, or None."""
    y, c, m = seed % n, (2 * seed + 1) % n, 128
    g = r = q = 1
    iterations = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        iterations += r
        r *= 2
        if iterations > cap:
            return None
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def _rho_split(n: int, cap: int) -> int | None:
    # The iteration cap is shared across eight restarts.
    for seed in range(1, 9):
        g = _brent(n, max(cap // 8, 1), seed)
        if g is not None:
            return g
    return None


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> FactoredInteger:
    if n == 0:
        raise DomainError("cannot factor zero")
    sign = 1 if n > 0 else -1
    m = abs(n)
    found: dict[int, int] = {}
    # trial division, skipping whole blocks that share no factor with m
    for block, prod in _prime_blocks(budget.trial_division_bound):
        if block[0] * block[0] > m or is_prime(m):
            break
        g = math.gcd(m, prod)
        if g == 1:
            continue
        for p in block:
            if g % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                found[p] = e
    leftover = 1
    if m > 1:
        stack = [m]
        while stack:
            x = stack.pop()
            if is_prime(x):
                found[x] = found.get(x, 0) + 1
                continue
            r = math.isqrt(x)
            if r * r == x:
                stack += [r, r]
                continue
            g = _rho_split(x, budget.rho_cap)
            if g is None:
                leftover *= x
            else:
                stack += [g, x // g]
    factors = tuple(sorted(found.items()))
    return FactoredInteger(
        value=n,
        sign=sign,
        factors=factors,
        complete=leftover == 1,
        unfactored_cofactor=leftover,
        probable=any(p >= MR_DETERMINISTIC_LIMIT for p, _ in factors),
    )


def squarefree_part(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> int:
    """Signed product of the primes dividing n to an odd power."""
    f = factorize(n, budget)
    if not f.complete:
        raise IncompleteFactorization(f)
    return f.sign * math.prod(p for p, e in f.factors if e % 2)


@lru_cache(maxsize=4096)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of |n| in ascending order."""
    if n == 0:
        raise DomainError("zero has infinitely many divisors")
    f = factorize(abs(n))
    if not f.complete:
        raise IncompleteFactorization(f)
    out = [1]
    for p, e in f.factors:
        out = [d * p**i for d in out for i in range(e + 1)]
    return tuple(sorted(out))


def signed_divisors(n: int) -> tuple[int, ...]:
    pos = divisors(n)
    return tuple(sorted([-d for d in pos] + list(pos)))

