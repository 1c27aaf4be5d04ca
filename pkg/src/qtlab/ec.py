"""
Integral points on E_k : Y^2 = X^3 - 2^k X with Y > 0.

Points with X = -2t, Y = 2c parametrize integer solutions of
3t^2 - 4d = 2^(k-1) together with t(t^2 - 4d) = c^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import is_perfect_square

# X^3 stays below 2^63 for |X| up to this bound.
_INT64_SAFE_X = 2_000_000
_CHUNK = 1 << 20


@dataclass(frozen=True, order=True)
class ECPoint:
    X: int
    Y: int
    k: int

    def __post_init__(self):
        if self.Y <= 0 or self.Y * self.Y != self.X**3 - 2**self.k * self.X:
            raise ValueError(f"({self.X}, {self.Y}) is not a point of E_{self.k} with Y > 0")


@dataclass(frozen=True)
class ECSolutionSet:
    k: int
    k_mod4: int
    points: tuple[ECPoint, ...]

    def __post_init__(self):
        if self.k_mod4 in (0, 2, 3):
            assert not self.points

    def restricted(self, xbound: int) -> list[ECPoint]:
        return [p for p in self.points if abs(p.X) <= xbound]


@dataclass(frozen=True)
class CurveCoefficients:
    t: int
    c: int
    d: Fraction

    @property
    def integral(self) -> bool:
        return self.d.denominator == 1

    def triple(self) -> tuple[int, int, int] | None:
        """(t, c^2, d) when d is an integer."""
        return (self.t, self.c * self.c, int(self.d)) if self.integral else None


def _x_ranges(k: int, xbound: int) -> list[tuple[int, int]]:
    """X-intervals where X^3 - 2^k X > 0: (-2^(k/2), 0) and (2^(k/2), inf)."""
    edge = math.isqrt(2**k)  # floor(2^(k/2))
    neg = (max(-xbound, -edge), -1)
    pos = (edge + 1, xbound)
    return [r for r in (neg, pos) if r[0] <= r[1]]


def _scan_python(k: int, lo: int, hi: int) -> list[ECPoint]:
    n = 2**k
    out = []
    for X in range(lo, hi + 1):
        v = X * X * X - n * X
        if v > 0:
            r = math.isqrt(v)
            if r * r == v:
                out.append(ECPoint(X, r, k))
    return out


def _scan_numpy(k: int, lo: int, hi: int) -> list[ECPoint]:
    n = 2**k
    out = []
    for start in range(lo, hi + 1, _CHUNK):
        X = np.arange(start, min(start + _CHUNK, hi + 1), dtype=np.int64)
        v = X * X * X - np.int64(n) * X
        pos = v > 0
        X, v = X[pos], v[pos]
        r = np.sqrt(v.astype(np.float64)).astype(np.int64)
        hit = np.zeros(len(v), dtype=bool)
        for shift in (-1, 0, 1):
            s = r + shift
            hit |= s * s == v
        for x in X[hit].tolist():
            val = x**3 - n * x
            if is_perfect_square(val):  # exact recheck in Python ints
                out.append(ECPoint(x, math.isqrt(val), k))
    return out


def ec_points_bruteforce(k: int, xbound: int) -> list[ECPoint]:
    """All integral points with |X| <= xbound and Y > 0, ascending in X."""
    if k < 1 or xbound < 1:
        raise ValueError("need k >= 1 and xbound >= 1")
    vectorised = xbound <= _INT64_SAFE_X and k <= 30
    out = []
    for lo, hi in _x_ranges(k, xbound):
        out += _scan_numpy(k, lo, hi) if vectorised else _scan_python(k, lo, hi)
    return sorted(out)


def _pt(X: int, Y: int, k: int) -> ECPoint:
    return ECPoint(X, Y, k)  # the constructor asserts the curve equation


def ec_expected_points(k: int) -> ECSolutionSet:
    """The tabulated integral points of E_k with Y > 0."""
    if k < 1:
        raise ValueError("need k >= 1")
    kbar = k % 4
    if k == 1:
        pts = [_pt(-1, 1, 1), _pt(2, 2, 1), _pt(2 * 13**2, 2 * 13 * 239, 1)]
    elif kbar == 1 and k >= 5:
        pts = [
            _pt(-(2 ** ((k - 1) // 2)), 2 ** (3 * (k - 1) // 4), k),
            _pt(2 ** ((k + 1) // 2), 2 ** ((3 * k + 1) // 4), k),
            _pt(2 ** ((k + 1) // 2) * 13**2, 2 ** ((3 * k + 1) // 4) * 13 * 239, k),
            _pt(2 ** ((k - 5) // 2) * 3**2, 2 ** (3 * (k - 5) // 4) * 3 * 7, k),
        ]
    else:
        pts = []
    return ECSolutionSet(k, kbar, tuple(sorted(pts)))


def ec_point_to_coefficients(p: ECPoint) -> CurveCoefficients | None:
    """Map X = -2t, Y = 2c back to (t, c) and d = (3t^2 - 2^(k-1))/4."""
    if p.X % 2 or p.Y % 2:
        return None
    t, c = -p.X // 2, p.Y // 2
    d = Fraction(3 * t * t - 2 ** (p.k - 1), 4)
    assert c * c == -2 * t**3 + 2 ** (p.k - 1) * t
    return CurveCoefficients(t, c, d)
