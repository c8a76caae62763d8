"""Real-root machinery for the broken-stick cubics, plus a guarded Brent.

``triangle_cubic_roots`` solves (1 - w) w^2 - 4 z = 0, equivalently the
monic cubic w^3 - w^2 + 4 z = 0, which for 0 < z <= 1/27 has three real
roots c < 0 <= a <= b < 1.  Shifting w = 1/3 + s gives the depressed
cubic s^3 - s/3 + (4 z - 2/27) = 0, in the casus irreducibilis for the
whole z range, so the cosine parameterisation applies:

    w_k = 1/3 + (2/3) cos(phi/3 - 2 pi k / 3),  phi = arccos(1 - 54 z),

with k = 0, 1, 2 giving b, a, c.  This is the same root set as the
complex-cube-root formulas from Cardano's method, but stays in real
arithmetic with unambiguous branches.  Roots are then polished with
guarded Newton steps.  Within 1e-9 of the double root at z = 1/27 the
arccos loses half the working digits, so a short series in
t = 2 sqrt(1/27 - z) is used instead:

    a, b = 2/3 -+ t - t^2/2 -+ (5/8) t^3,      c = 1 - a - b.

``quad_cubic_roots`` solves (1-r2)(1-r3)(r2+r3)^2 - 4 r1 = 0 as a cubic
in r3.  Dividing by -(1-r2) gives the monic form

    r3^3 + (2 r2 - 1) r3^2 - r2 (2 - r2) r3 + (4 r1/(1-r2) - r2^2) = 0.

Three real roots exist iff 4 r1 <= M(r2) = (4/27)(1-r2)(1+r2)^3, the
local maximum of (1-r2)(1-r3)(r2+r3)^2 over r3, attained at
r3 = (2-r2)/3.  Unlike the triangle case the middle root can be
negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, NonFiniteError, NoRealTripleError, NoSignChangeError

_EPS = 2.220446049250313e-16
_TWO_PI_3 = 2.0 * math.pi / 3.0

Z_MAX = 1.0 / 27.0


@dataclass(frozen=True)
class CubicRoots:
    """Ordered real roots c < a <= b of (1 - w) w^2 - 4 z."""

    c: float
    a: float
    b: float
    z: float


@dataclass(frozen=True)
class QuadCubicRoots:
    """Ordered real roots c < a < b of (1-r2)(1-r3)(r2+r3)^2 - 4 r1 in r3."""

    c: float
    a: float
    b: float
    r1: float
    r2: float


def _newton_polish(w: float, f: Callable[[float], float], df: Callable[[float], float],
                   steps: int = 2, min_slope: float = 1e-8) -> float:
    for _ in range(steps):
        slope = df(w)
        if abs(slope) < min_slope:
            break
        w -= f(w) / slope
    return w


def triangle_cubic_roots(z: float) -> CubicRoots:
    """Roots of the stick-length-2 triangle cubic at area-squared z.

    Valid for 0 < z <= 1/27 (1/27 is the squared area of the equilateral
    triangle).  Vieta: a + b + c = 1, ab + bc + ca = 0, abc = -4z.
    """
    z = float(z)
    if not math.isfinite(z) or z <= 0.0 or z > Z_MAX:
        raise DomainError(f"triangle cubic needs 0 < z <= 1/27, got {z!r}")

    e = Z_MAX - z
    if e < 1e-9:
        # Double-root neighbourhood: series in t = 2 sqrt(1/27 - z).
        t = 2.0 * math.sqrt(e) if e > 0.0 else 0.0
        t2 = t * t
        t3 = t2 * t
        a = 2.0 / 3.0 - t - 0.5 * t2 - 0.625 * t3
        b = 2.0 / 3.0 + t - 0.5 * t2 + 0.625 * t3
        c = 1.0 - a - b
        return CubicRoots(c=c, a=a, b=b, z=z)

    phi = math.acos(min(1.0, max(-1.0, 1.0 - 54.0 * z)))
    third = phi / 3.0
    w_b = 1.0 / 3.0 + (2.0 / 3.0) * math.cos(third)
    w_a = 1.0 / 3.0 + (2.0 / 3.0) * math.cos(third - _TWO_PI_3)
    w_c = 1.0 / 3.0 + (2.0 / 3.0) * math.cos(third - 2.0 * _TWO_PI_3)

    f = lambda w: (w - 1.0) * w * w + 4.0 * z
    df = lambda w: w * (3.0 * w - 2.0)
    w_a = _newton_polish(w_a, f, df)
    w_b = _newton_polish(w_b, f, df)
    w_c = _newton_polish(w_c, f, df)

    c, a, b = sorted((w_a, w_b, w_c))
    return CubicRoots(c=c, a=a, b=b, z=z)


def quad_real_root_bound(r2: float) -> float:
    """Largest 4*r1 for which the r3 cubic at this r2 has three real roots."""
    return (4.0 / 27.0) * (1.0 - r2) * (1.0 + r2) ** 3


def _monic_three_real(b2: float, b1: float, b0: float, clamp: bool) -> tuple[float, float, float]:
    """Ascending real roots of x^3 + b2 x^2 + b1 x + b0 (three-real case)."""
    p = b1 - b2 * b2 / 3.0
    q = b0 - b2 * b1 / 3.0 + 2.0 * b2 ** 3 / 27.0
    if p >= 0.0:
        raise NoRealTripleError("cubic is not in the three-real-root regime")
    arg = 1.5 * q / p * math.sqrt(-3.0 / p)
    if not clamp and abs(arg) > 1.0 + 1e-9:
        raise NoRealTripleError("cubic discriminant shows fewer than three real roots")
    theta = math.acos(min(1.0, max(-1.0, arg)))
    scale = 2.0 * math.sqrt(-p / 3.0)
    shift = -b2 / 3.0
    roots = [shift + scale * math.cos(theta / 3.0 - _TWO_PI_3 * k) for k in range(3)]

    def f(x: float) -> float:
        return ((x + b2) * x + b1) * x + b0

    def df(x: float) -> float:
        return (3.0 * x + 2.0 * b2) * x + b1

    return tuple(sorted(_newton_polish(r, f, df) for r in roots))  # type: ignore[return-value]


def quad_cubic_roots(r1: float, r2: float) -> QuadCubicRoots:
    """Roots in r3 of the quadrilateral cubic for given (r1, r2).

    Raises NoRealTripleError when 4 r1 exceeds the attainable maximum
    (4/27)(1-r2)(1+r2)^3, i.e. when r1 is beyond the largest area-squared
    compatible with side r2.
    """
    r1 = float(r1)
    r2 = float(r2)
    if not (math.isfinite(r1) and math.isfinite(r2)) or r1 <= 0.0 or not 0.0 < r2 < 1.0:
        raise DomainError(f"quad cubic needs r1 > 0 and 0 < r2 < 1, got {(r1, r2)!r}")
    if 4.0 * r1 > quad_real_root_bound(r2) * (1.0 + 4.0 * _EPS):
        raise NoRealTripleError(
            f"no real root triple: 4*r1={4.0 * r1!r} exceeds max {quad_real_root_bound(r2)!r}"
        )
    c, a, b = _quad_roots_raw(r1, r2, clamp=True)
    return QuadCubicRoots(c=c, a=a, b=b, r1=r1, r2=r2)


def _quad_roots_raw(r1: float, r2: float, clamp: bool) -> tuple[float, float, float]:
    b2 = 2.0 * r2 - 1.0
    b1 = -r2 * (2.0 - r2)
    b0 = 4.0 * r1 / (1.0 - r2) - r2 * r2
    return _monic_three_real(b2, b1, b0, clamp=clamp)


def find_root_bracketed(f: Callable[[float], float], lo: float, hi: float,
                        tol: float, max_iter: int = 600) -> float:
    """Root of f inside [lo, hi] by Brent's method.

    Requires f(lo) and f(hi) of opposite sign and tol > 0; converges to a
    bracket of width <= tol plus a few ulps of the abscissa.  Inverse
    quadratic / secant steps with a bisection fallback, so convergence is
    guaranteed for any continuous f.
    """
    if not (tol > 0.0):
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    a, b = float(lo), float(hi)
    fa, fb = f(a), f(b)
    if not (math.isfinite(fa) and math.isfinite(fb)):
        raise NonFiniteError(f"f non-finite at bracket endpoint: f({a})={fa!r}, f({b})={fb!r}")
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise NoSignChangeError(f"f({a})={fa!r} and f({b})={fb!r} have the same sign")

    c, fc = a, fa
    e = d = b - a
    for _ in range(max_iter):
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol_iter = 2.0 * _EPS * abs(b) + 0.5 * tol
        m = 0.5 * (c - b)
        if abs(m) <= tol_iter or fb == 0.0:
            return b
        if abs(e) < tol_iter or abs(fa) <= abs(fb):
            e = d = m
        else:
            s = fb / fa
            if a == c:
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            else:
                p = -p
            s = e
            e = d
            if 2.0 * p < 3.0 * m * q - abs(tol_iter * q) and p < abs(0.5 * s * q):
                d = p / q
            else:
                e = d = m
        a, fa = b, fb
        if abs(d) > tol_iter:
            b += d
        else:
            b += tol_iter if m > 0.0 else -tol_iter
        fb = f(b)
        if not math.isfinite(fb):
            raise NonFiniteError(f"f({b}) evaluated to {fb!r} inside the bracket")
        if (fb > 0.0) == (fc > 0.0):
            c, fc = a, fa
            e = d = b - a
    return b
