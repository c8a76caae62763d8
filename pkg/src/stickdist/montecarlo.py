"""Deterministic split-stream Monte Carlo support.

A master seed and a worker count define the entire experiment: worker i
draws from ``numpy`` PCG64 seeded with SeedSequence(seed, spawn_key=(i,)),
processes its share of the trials, and the per-worker accumulators are
merged in worker order.  The merged result is therefore a pure function
of (seed, count, workers), regardless of how or where the chunks
actually execute, and repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

__all__ = ["SampleStats", "worker_rngs", "chunk_sizes", "BATCH"]

BATCH = 1 << 20  # trials processed per vectorized block inside a worker


def chunk_sizes(count: int, workers: int) -> list[int]:
    """Near-even split of count trials over workers (first chunks get the rest)."""
    if count < 1 or workers < 1:
        raise DomainError(f"need count >= 1 and workers >= 1, got {(count, workers)!r}")
    base, extra = divmod(count, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def worker_rngs(seed: int, workers: int) -> list[np.random.Generator]:
    """One independent, reproducible generator per worker."""
    return [
        np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(i,))))
        for i in range(workers)
    ]


@dataclass
class SampleStats:
    """Streaming accumulator for accepted-sample statistics.

    Tracks the trial/acceptance counts, Welford mean and M2 of the
    accepted areas, their range, a fixed-bin histogram, and the seed
    lineage.  ``merge`` combines two accumulators exactly (Chan's
    parallel update), so worker results can be folded deterministically.
    """

    trials: int = 0
    accepted: int = 0
    mean: float = 0.0
    m2: float = 0.0
    area_min: float = math.inf
    area_max: float = -math.inf
    hist_lo: float = 0.0
    hist_hi: float = 1.0
    hist_counts: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=np.int64))
    solver_failures: int = 0
    seed: int | None = None
    workers: int = 1

    @classmethod
    def empty(cls, bins: int, lo: float, hi: float, seed: int | None, workers: int) -> "SampleStats":
        return cls(hist_lo=lo, hist_hi=hi,
                   hist_counts=np.zeros(bins, dtype=np.int64),
                   seed=seed, workers=workers)

    @classmethod
    def from_areas(cls, trials: int, areas: np.ndarray, bins: int,
                   lo: float, hi: float, solver_failures: int = 0) -> "SampleStats":
        n = int(areas.size)
        if n:
            mean = float(areas.mean())
            m2 = float(np.sum((areas - mean) ** 2))
            amin = float(areas.min())
            amax = float(areas.max())
        else:
            mean = m2 = 0.0
            amin, amax = math.inf, -math.inf
        counts = np.histogram(areas, bins=bins, range=(lo, hi))[0]
        return cls(trials=trials, accepted=n, mean=mean, m2=m2,
                   area_min=amin, area_max=amax,
                   hist_lo=lo, hist_hi=hi, hist_counts=counts,
                   solver_failures=solver_failures)

    def merge(self, other: "SampleStats") -> "SampleStats":
        """Exact order-dependent combination of two accumulators."""
        if self.hist_counts.size and other.hist_counts.size:
            if (self.hist_counts.size != other.hist_counts.size
                    or self.hist_lo != other.hist_lo or self.hist_hi != other.hist_hi):
                raise DomainError("cannot merge stats with different histogram layouts")
            counts = self.hist_counts + other.hist_counts
        else:
            counts = self.hist_counts if self.hist_counts.size else other.hist_counts
        na, nb = self.accepted, other.accepted
        n = na + nb
        if n == 0:
            mean, m2 = 0.0, 0.0
        elif na == 0:
            mean, m2 = other.mean, other.m2
        elif nb == 0:
            mean, m2 = self.mean, self.m2
        else:
            delta = other.mean - self.mean
            mean = self.mean + delta * nb / n
            m2 = self.m2 + other.m2 + delta * delta * na * nb / n
        return SampleStats(
            trials=self.trials + other.trials,
            accepted=n,
            mean=mean,
            m2=m2,
            area_min=min(self.area_min, other.area_min),
            area_max=max(self.area_max, other.area_max),
            hist_lo=self.hist_lo if self.hist_counts.size else other.hist_lo,
            hist_hi=self.hist_hi if self.hist_counts.size else other.hist_hi,
            hist_counts=counts,
            solver_failures=self.solver_failures + other.solver_failures,
            seed=self.seed if self.seed is not None else other.seed,
            workers=self.workers,
        )

    # -- derived quantities ------------------------------------------------

    @property
    def acceptance_ratio(self) -> float:
        return self.accepted / self.trials if self.trials else math.nan

    @property
    def acceptance_se(self) -> float:
        if not self.trials:
            return math.nan
        p = self.acceptance_ratio
        return math.sqrt(p * (1.0 - p) / self.trials)

    @property
    def variance(self) -> float:
        return self.m2 / (self.accepted - 1) if self.accepted > 1 else math.nan

    @property
    def mean_se(self) -> float:
        return math.sqrt(self.variance / self.accepted) if self.accepted > 1 else math.nan

    def quantile(self, q: float) -> float:
        """Histogram-interpolated quantile of the accepted areas."""
        if not 0.0 < q < 1.0:
            raise DomainError(f"quantile needs 0 < q < 1, got {q!r}")
        if self.accepted == 0 or not self.hist_counts.size:
            return math.nan
        cum = np.cumsum(self.hist_counts)
        target = q * cum[-1]
        idx = int(np.searchsorted(cum, target))
        prev = cum[idx - 1] if idx > 0 else 0
        inside = self.hist_counts[idx]
        frac = (target - prev) / inside if inside else 0.5
        width = (self.hist_hi - self.hist_lo) / self.hist_counts.size
        return self.hist_lo + (idx + frac) * width

    def scaled_dict(self, area_factor: float = 1.0) -> dict:
        """JSON-ready summary; areas multiplied by area_factor."""
        f = area_factor
        return {
            "trials": self.trials,
            "accepted": self.accepted,
            "acceptance_ratio": self.acceptance_ratio,
            "acceptance_se": self.acceptance_se,
            "mean_area": self.mean * f,
            "mean_se": self.mean_se * f,
            "variance": self.variance * f * f,
            "area_min": self.area_min * f,
            "area_max": self.area_max * f,
            "solver_failures": self.solver_failures,
            "seed": self.seed,
            "workers": self.workers,
            "histogram": {
                "lo": self.hist_lo * f,
                "hi": self.hist_hi * f,
                "counts": self.hist_counts.tolist(),
            },
        }
