"""Area distribution of a triangle made from a randomly broken stick.

A stick of length 2 is cut at two independent uniform points.  The three
pieces form a triangle with probability 1/4, and conditional on forming
one the squared area z = area^2 lies in (0, 1/27].  All closed forms
below are in these canonical units; a stick of length L rescales every
area by (L/2)^2.

Writing c(z) < 0 < a(z) < b(z) < 1 for the roots of (1-w) w^2 - 4 z,
the density of z is

    g(z) = 8 / sqrt((1-a)(b-c)) * K[(b-a)(1-c) / ((1-a)(b-c))],

so the area density is f(zeta) = 2 zeta g(zeta^2) on 0 < zeta <
1/(3 sqrt 3).  f vanishes at 0, increases, and approaches the finite
limit 8 pi / 3 at the right endpoint (the K argument goes to 0 there,
not 1, so there is no divergence; the vertical tangent comes from the
sqrt behaviour of the roots at the double point).

The survival function has a closed form as well: with alpha =
sqrt(1-b), beta = sqrt(1-a), gamma = sqrt(1-c),

    P{area > zeta} = 4 J(zeta),
    J = (1/2) int_alpha^beta sqrt((1-t^2)^2 t^2 - 4 zeta^2) dt,

and 8J evaluates in terms of E, K, Pi (see ``survival``).  Solving
8 J(mu) = 1 pins the median to full double precision.

Monte Carlo sampling lives at the bottom; it uses the deterministic
split-stream scheme from ``montecarlo``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NoConvergenceError, ToleranceNotMetError
from .montecarlo import BATCH, SampleStats, chunk_sizes, worker_rngs
from .quadrature import integrate_endpoint_singular
from .roots import Z_MAX, find_root_bracketed, triangle_cubic_roots
from .specfun import ellip_e_c, ellip_k_c, ellip_pi_c

ZETA_MAX = math.sqrt(Z_MAX)          # 1/(3 sqrt 3), area of the equilateral case
MEAN_AREA = 4.0 * math.pi / 105.0
MEAN_SQUARE_AREA = 1.0 / 60.0
PDF_AT_MAX = 8.0 * math.pi / 3.0     # finite right-endpoint limit of the pdf

_MEDIAN_BRACKET = (0.05, 0.19)

__all__ = [
    "ZETA_MAX", "MEAN_AREA", "MEAN_SQUARE_AREA", "PDF_AT_MAX",
    "StickConvention", "AreaPoint", "TriangleSides",
    "density_of_area_squared", "pdf", "survival", "cdf", "median", "moment",
    "sample", "sample_areas", "heron_area",
]


@dataclass(frozen=True)
class StickConvention:
    """Stick length in force; canonical computations use length 2."""

    length: float = 2.0

    def __post_init__(self) -> None:
        if not (isinstance(self.length, (int, float)) and self.length > 0.0
                and math.isfinite(self.length)):
            raise DomainError(f"stick length must be a positive real, got {self.length!r}")

    @property
    def area_scale(self) -> float:
        """Multiplier taking canonical (length 2) areas to this convention."""
        return (self.length / 2.0) ** 2


@dataclass(frozen=True)
class AreaPoint:
    """An area value zeta with its squared form z, canonical units."""

    zeta: float
    z: float

    @classmethod
    def from_zeta(cls, zeta: float) -> "AreaPoint":
        zeta = float(zeta)
        if not (0.0 < zeta < ZETA_MAX):
            raise DomainError(f"area must lie in (0, 1/(3*sqrt(3))), got {zeta!r}")
        return cls(zeta=zeta, z=zeta * zeta)


@dataclass(frozen=True)
class TriangleSides:
    """Sides of a stick-length-2 triangle (strict triangle inequalities)."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        sides = (self.a, self.b, self.c)
        if abs(sum(sides) - 2.0) > 1e-9:
            raise DomainError(f"sides must sum to 2, got {sides!r}")
        if not all(0.0 < s < 1.0 for s in sides):
            raise DomainError(f"each side must lie in (0, 1), got {sides!r}")

    def area(self) -> float:
        return float(heron_area(np.array([self.a]), np.array([self.b]), np.array([self.c]))[0])


def heron_area(a, b, c):
    """Numerically stable Heron area (Kahan's sorted-sides form), vectorized.

    Sorts so x >= y >= z and evaluates
    (1/4) sqrt((x+(y+z)) (z-(x-y)) (z+(x-y)) (x+(y-z))), which avoids the
    cancellation of the naive semiperimeter product for thin triangles.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    x = np.maximum(np.maximum(a, b), c)
    z = np.minimum(np.minimum(a, b), c)
    y = a + b + c - x - z
    rad = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    return 0.25 * np.sqrt(np.maximum(rad, 0.0))


def density_of_area_squared(z: float) -> float:
    """Density g(z) of z = area^2 on 0 < z <= 1/27.

    The complement of the K argument is formed directly from the roots,
    1 - m = (a-c)(1-b) / ((1-a)(b-c)), which stays exact as z -> 0 where
    m -> 1 and the naive subtraction would lose every digit.
    """
    r = triangle_cubic_roots(z)
    denom = (1.0 - r.a) * (r.b - r.c)
    mc = (r.a - r.c) * (1.0 - r.b) / denom
    # For z below ~1e-17 the 1-b factor underflows; the clamp keeps K finite
    # (the pdf there is O(zeta log zeta), far below any quadrature weight).
    mc = max(mc, 1e-300)
    return 8.0 / math.sqrt(denom) * ellip_k_c(min(mc, 1.0))


def pdf(zeta: float) -> float:
    """Area density f(zeta) = 2 zeta g(zeta^2) on the open support."""
    zeta = float(zeta)
    if not (0.0 < zeta < ZETA_MAX):
        raise DomainError(f"pdf defined on 0 < zeta < 1/(3*sqrt(3)), got {zeta!r}")
    z = min(zeta * zeta, Z_MAX)
    return 2.0 * zeta * density_of_area_squared(z)


def survival(zeta: float) -> float:
    """P{area > zeta} for 0 <= zeta <= 1/(3 sqrt 3), by the 8J closed form.

    With alpha^2 = 1-b, beta^2 = 1-a, gamma^2 = 1-c and
    m = (b-a) gamma^2 / ((b-c) beta^2), n = (b-a)/(1-a):

    8J = beta sqrt(g2-a2) (a2+b2+g2) E[m]
         + (a2 beta / sqrt(g2-a2)) (a2+b2-5 g2) K[m]
         - (a2 / (beta sqrt(g2-a2))) (alpha+beta-gamma)(alpha-beta-gamma)
           (alpha-beta+gamma)(alpha+beta+gamma) Pi[n, m]

    and P{area > zeta} = 8J / 2.  The complements 1-m = a2 (a-c) /
    (beta^2 (b-c)) and 1-n = a2/beta^2 are formed from the roots
    directly, keeping precision at both ends of the support.
    """
    zeta = float(zeta)
    if not (0.0 <= zeta <= ZETA_MAX) or not math.isfinite(zeta):
        raise DomainError(f"survival defined on [0, 1/(3*sqrt(3))], got {zeta!r}")
    if zeta == 0.0:
        return 1.0
    z = zeta * zeta
    if z >= Z_MAX:
        return 0.0
    r = triangle_cubic_roots(z)
    a2 = 1.0 - r.b            # alpha^2
    b2 = 1.0 - r.a            # beta^2
    g2 = 1.0 - r.c            # gamma^2
    alpha, beta, gamma = math.sqrt(a2), math.sqrt(b2), math.sqrt(g2)
    s = math.sqrt(r.b - r.c)  # sqrt(g2 - a2)
    mc = min(a2 * (r.a - r.c) / (b2 * (r.b - r.c)), 1.0)
    nc = min(a2 / b2, 1.0)
    e_val = ellip_e_c(mc)
    k_val = ellip_k_c(max(mc, 1e-300))
    pi_val = ellip_pi_c(nc, max(mc, 1e-300))
    prod = ((alpha + beta - gamma) * (alpha - beta - gamma)
            * (alpha - beta + gamma) * (alpha + beta + gamma))
    eight_j = (beta * s * (a2 + b2 + g2) * e_val
               + (a2 * beta / s) * (a2 + b2 - 5.0 * g2) * k_val
               - (a2 / (beta * s)) * prod * pi_val)
    return min(1.0, max(0.0, 0.5 * eight_j))


def cdf(zeta: float) -> float:
    """P{area <= zeta} = 1 - survival(zeta)."""
    return 1.0 - survival(zeta)


def median(tol: float = 1e-15, stick_length: float = 2.0) -> float:
    """Median area, to root-finder tolerance tol, scaled to the stick length.

    Canonical value (length 2): 0.1258338431386510592028005...; a length-L
    stick multiplies it by (L/2)^2 (deferred scaling, not recomputation).
    """
    if not tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    lo, hi = _MEDIAN_BRACKET
    if not (survival(lo) > 0.5 > survival(hi)):
        raise NoConvergenceError("median bracket [0.05, 0.19] does not straddle 1/2")
    mu = find_root_bracketed(lambda t: survival(t) - 0.5, lo, hi, tol)
    return mu * StickConvention(stick_length).area_scale


def moment(k: int) -> float:
    """E(area^k) by endpoint-singular quadrature of the pdf, k >= 1.

    k = 1 gives 4 pi / 105 and k = 2 gives 1/60 (canonical units).
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"moment order must be an integer >= 1, got {k!r}")
    res = integrate_endpoint_singular(
        lambda t: t ** k * 2.0 * t * density_of_area_squared(min(t * t, Z_MAX)),
        0.0, ZETA_MAX, 1e-11,
    )
    if not res.converged:
        raise ToleranceNotMetError(f"moment({k}) quadrature: error {res.abs_error_estimate:g}")
    return res.value


# --------------------------------------------------------------------------
# Monte Carlo

def _chunk_stats(rng: np.random.Generator, count: int, bins: int,
                 keep: bool) -> tuple[SampleStats, list[np.ndarray]]:
    hist_hi = ZETA_MAX * (1.0 + 1e-12)
    stats = SampleStats.empty(bins, 0.0, hist_hi, None, 1)
    kept: list[np.ndarray] = []
    remaining = count
    while remaining:
        n = min(remaining, BATCH)
        remaining -= n
        cuts = rng.random((2, n)) * 2.0
        lo = np.minimum(cuts[0], cuts[1])
        hi = np.maximum(cuts[0], cuts[1])
        p1, p2, p3 = lo, hi - lo, 2.0 - hi
        ok = (p1 < 1.0) & (p2 < 1.0) & (p3 < 1.0)  # ties count as failures
        areas = heron_area(p1[ok], p2[ok], p3[ok])
        stats = stats.merge(SampleStats.from_areas(n, areas, bins, 0.0, hist_hi))
        if keep:
            kept.append(areas)
    return stats, kept


def sample(seed: int, count: int, workers: int = 1, *, bins: int = 512) -> SampleStats:
    """Break the stick twice, count triangle successes, accumulate areas.

    Two independent uniform break points on [0, 2]; the pieces form a
    triangle iff each is strictly shorter than 1 (exact ties, a measure
    zero event, count as failures).  Areas use the stable Heron form.
    Result is a pure function of (seed, count, workers).
    """
    stats, _ = _run(seed, count, workers, bins, keep=False)
    return stats


def sample_areas(seed: int, count: int, workers: int = 1, *,
                 bins: int = 512) -> tuple[SampleStats, np.ndarray]:
    """Like ``sample`` but also returns the accepted areas in draw order."""
    stats, areas = _run(seed, count, workers, bins, keep=True)
    return stats, areas


def _run(seed: int, count: int, workers: int, bins: int,
         keep: bool) -> tuple[SampleStats, np.ndarray]:
    hist_hi = ZETA_MAX * (1.0 + 1e-12)
    total = SampleStats.empty(bins, 0.0, hist_hi, seed, workers)
    chunks: list[np.ndarray] = []
    for rng, n in zip(worker_rngs(seed, workers), chunk_sizes(count, workers)):
        if n == 0:
            continue
        stats, kept = _chunk_stats(rng, n, bins, keep)
        total = total.merge(stats)
        chunks.extend(kept)
    areas = np.concatenate(chunks) if chunks else np.empty(0)
    return total, areas
