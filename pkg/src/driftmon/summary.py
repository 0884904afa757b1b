"""Compact distribution summaries derived from a quantile sketch.

An :class:`ApproxCdf` stores a small grid of quantiles and interpolates
linearly between them, giving a piecewise-linear estimate of the empirical
CDF whose error is bounded by the grid resolution plus the sketch's rank
error.  A :class:`BinnedDensity` turns such a CDF into per-bin probability
masses over a uniform grid, which is what the distance metrics consume.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import numpy as np

from .errors import EmptySummaryError, ValidationError
from .sketch import QuantileSketch

__all__ = ["ApproxCdf", "BinnedDensity", "build_cdf", "density_from_cdf"]


@dataclass(frozen=True)
class ApproxCdf:
    """Piecewise-linear CDF estimate: ``probabilities[i]`` of the mass lies
    at or below ``breakpoints[i]``.  Immutable once built."""

    label: str
    sample_count: int
    breakpoints: tuple[float, ...]
    probabilities: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.sample_count < 1:
            raise ValidationError(f"sample_count must be >= 1, got {self.sample_count}")
        if len(self.breakpoints) != len(self.probabilities) or not self.breakpoints:
            raise ValidationError("breakpoints and probabilities must be equal-length and non-empty")
        if any(b2 < b1 for b1, b2 in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValidationError("breakpoints must be non-decreasing")
        if any(q2 <= q1 for q1, q2 in zip(self.probabilities, self.probabilities[1:])):
            raise ValidationError("probabilities must be strictly increasing")
        if not 0.0 < self.probabilities[0] <= 1.0 or self.probabilities[-1] != 1.0:
            raise ValidationError("probabilities must lie in (0, 1] and end at 1.0")

    def __call__(self, x: float) -> float:
        """Evaluate the CDF at ``x`` (right-continuous).

        Below the first breakpoint the estimate is 0; at or above the last
        it is exactly 1.  Where several breakpoints share a value the
        largest probability of the run applies, so ties behave as jumps.
        """
        x = float(x)
        if not math.isfinite(x):
            raise ValidationError(f"evaluation point must be finite, got {x!r}")
        bps = self.breakpoints
        if x < bps[0]:
            return 0.0
        if x >= bps[-1]:
            return 1.0
        j = bisect_right(bps, x) - 1
        q = self.probabilities
        if bps[j] == x:
            return q[j]
        frac = (x - bps[j]) / (bps[j + 1] - bps[j])
        return q[j] + (q[j + 1] - q[j]) * frac

    def left_limit(self, x: float) -> float:
        """Limit of the CDF as the argument approaches ``x`` from below.

        Differs from ``self(x)`` only at jump points: the minimum
        breakpoint and any run of tied breakpoints.
        """
        x = float(x)
        if not math.isfinite(x):
            raise ValidationError(f"evaluation point must be finite, got {x!r}")
        bps = self.breakpoints
        if x <= bps[0]:
            return 0.0
        if x > bps[-1]:
            return 1.0
        i = bisect_left(bps, x)
        if bps[i] == x:
            return self.probabilities[i]
        return self(x)


@dataclass(frozen=True)
class BinnedDensity:
    """Probability mass per uniform bin; ``masses`` sums to 1."""

    bin_edges: tuple[float, ...]
    masses: tuple[float, ...]
    bin_width: float

    def __post_init__(self) -> None:
        if len(self.bin_edges) != len(self.masses) + 1 or not self.masses:
            raise ValidationError("need K >= 1 masses and K + 1 bin edges")
        if any(e2 <= e1 for e1, e2 in zip(self.bin_edges, self.bin_edges[1:])):
            raise ValidationError("bin edges must be strictly increasing")
        if any(m < 0.0 for m in self.masses):
            raise ValidationError("masses must be non-negative")
        if abs(math.fsum(self.masses) - 1.0) > 1e-12:
            raise ValidationError("masses must sum to 1 within 1e-12")


def build_cdf(sketch: QuantileSketch, points: int, label: str) -> ApproxCdf:
    """Summarise a sketch as an interpolated CDF on ``points`` quantiles.

    The probability grid is linearly spaced from ``1/N`` to ``1`` so the
    first breakpoint sits near the sample minimum and the last is the exact
    maximum.  A single-observation stream degenerates to one breakpoint.
    """
    if not isinstance(points, int) or points < 1:
        raise ValidationError(f"points must be a positive integer, got {points!r}")
    n = sketch.count
    if n < 1:
        raise EmptySummaryError("cannot build a CDF from an empty sketch")
    if points == 1 and n > 1:
        raise ValidationError("a single-point grid is only valid for a single-observation stream")
    if n == 1:
        # Any requested grid collapses: there is exactly one quantile.
        grid = [1.0]
    else:
        grid = [float(p) for p in np.linspace(1.0 / n, 1.0, points)]
    breakpoints = tuple(sketch.query(p) for p in grid)
    return ApproxCdf(
        label=label,
        sample_count=n,
        breakpoints=breakpoints,
        probabilities=tuple(grid),
    )


def density_from_cdf(cdf: ApproxCdf, lo: float, hi: float, bins: int) -> BinnedDensity:
    """Bin a CDF into ``bins`` uniform probability masses over ``[lo, hi]``.

    Mass the CDF places outside the range (including an atom exactly at
    ``lo``) is redistributed uniformly across all bins, so the result is
    always a proper distribution.  Tiny negative masses from rounding are
    clamped to zero and the vector renormalised.
    """
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValidationError(f"need finite lo < hi, got lo={lo!r}, hi={hi!r}")
    if not isinstance(bins, int) or bins < 1:
        raise ValidationError(f"bins must be a positive integer, got {bins!r}")
    edges = np.linspace(lo, hi, bins + 1)
    values = np.array([cdf(e) for e in edges])
    raw = np.diff(values)
    # The raw masses telescope to F(hi) - F(lo); computing the leftover that
    # way keeps the correction exactly zero when the range covers the whole
    # distribution, so empty bins stay exactly empty.
    correction = (1.0 - (values[-1] - values[0])) / bins
    masses = raw + correction
    np.clip(masses, 0.0, None, out=masses)
    masses /= masses.sum()
    return BinnedDensity(
        bin_edges=tuple(float(e) for e in edges),
        masses=tuple(float(m) for m in masses),
        bin_width=(hi - lo) / bins,
    )
