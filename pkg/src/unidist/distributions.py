"""Scale-quantized feature distributions and histogram densities.

A :class:`ScaledDistribution` describes one feature of a prototype: a
central value plus an ordered run of regions on each side of it.  Each
region has a width along the feature axis and the probability mass it
holds.  Region boundaries are the distribution's scales.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MASS_TOLERANCE = 1e-9

DEFAULT_K_PER_SIDE = 3


@dataclass(frozen=True)
class Region:
    width: float
    mass: float

    def __post_init__(self):
        if not np.isfinite(self.width) or self.width < 0:
            raise ValueError(f"region width must be finite and >= 0, got {self.width}")
        if not 0.0 <= self.mass <= 1.0:
            raise ValueError(f"region mass must lie in [0, 1], got {self.mass}")


@dataclass(frozen=True)
class ScaledDistribution:
    """Center plus per-side regions, both listed from the center outward."""

    center: float
    below: tuple[Region, ...] = ()
    above: tuple[Region, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "below", tuple(_as_region(r) for r in self.below))
        object.__setattr__(self, "above", tuple(_as_region(r) for r in self.above))
        if not np.isfinite(self.center):
            raise ValueError("center must be finite")
        if self.total_mass > 1.0 + MASS_TOLERANCE:
            raise ValueError(f"region masses sum to {self.total_mass} > 1")

    @property
    def total_mass(self) -> float:
        return float(sum(r.mass for r in self.below) + sum(r.mass for r in self.above))

    @property
    def is_degenerate(self) -> bool:
        regions = self.below + self.above
        return all(r.width == 0 for r in regions) or all(r.mass == 0 for r in regions)

    def side(self, sign: int) -> tuple[Region, ...]:
        return self.above if sign > 0 else self.below

    def scales(self, sign: int) -> np.ndarray:
        """Boundary positions on one side, innermost first (center excluded)."""
        widths = np.array([r.width for r in self.side(sign)], dtype=float)
        return self.center + sign * np.cumsum(widths)

    def scaled(self, factor: float, shift: float = 0.0) -> ScaledDistribution:
        """Image under ``x -> factor * x + shift`` for ``factor > 0``."""
        if factor <= 0:
            raise ValueError("factor must be positive")
        return ScaledDistribution(
            center=factor * self.center + shift,
            below=tuple(Region(r.width * factor, r.mass) for r in self.below),
            above=tuple(Region(r.width * factor, r.mass) for r in self.above),
        )

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "below": [{"width": r.width, "mass": r.mass} for r in self.below],
            "above": [{"width": r.width, "mass": r.mass} for r in self.above],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ScaledDistribution:
        return cls(
            center=data["center"],
            below=tuple(Region(float(r["width"]), float(r["mass"])) for r in data.get("below", [])),
            above=tuple(Region(float(r["width"]), float(r["mass"])) for r in data.get("above", [])),
        )


def _as_region(r) -> Region:
    if isinstance(r, Region):
        return r
    width, mass = r
    return Region(float(width), float(mass))


@dataclass(frozen=True)
class Prototype:
    """A learned feature vector: one distribution per feature."""

    features: tuple[ScaledDistribution, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "features", tuple(self.features))
        if len(self.features) < 1:
            raise ValueError("a prototype needs at least one feature")

    def __len__(self):
        return len(self.features)

    @property
    def centers(self) -> np.ndarray:
        return np.array([f.center for f in self.features])

    def scaled(self, factor: float) -> Prototype:
        return Prototype(tuple(f.scaled(factor) for f in self.features), name=self.name)

    def to_dict(self) -> dict:
        out = {"features": [f.to_dict() for f in self.features]}
        if self.name is not None:
            out["name"] = self.name
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Prototype:
        return cls(
            tuple(ScaledDistribution.from_dict(f) for f in data["features"]),
            name=data.get("name"),
        )

    @classmethod
    def degenerate(cls, centers: Sequence[float], name: str | None = None) -> Prototype:
        """Prototype with no probability spread: distances reduce to Euclidean."""
        return cls(tuple(ScaledDistribution(float(c)) for c in centers), name=name)


@dataclass(frozen=True)
class QueryVector:
    coords: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(float(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def scaled(self, factor: float) -> QueryVector:
        return QueryVector(tuple(factor * c for c in self.coords))


@dataclass(frozen=True)
class HistogramDensity:
    """Piecewise-constant density on ``[lower, lower + bin_width * len(bins))``."""

    lower: float
    bin_width: float
    bins: np.ndarray

    def __post_init__(self):
        bins = np.asarray(self.bins, dtype=float)
        if bins.ndim != 1 or bins.size == 0:
            raise ValueError("bins must be a nonempty 1-d sequence")
        if not self.bin_width > 0:
            raise ValueError("bin_width must be positive")
        if not np.all(np.isfinite(bins)) or np.any(bins < 0):
            raise ValueError("bins must be finite and nonnegative")
        total = float(np.sum(bins) * self.bin_width)
        if abs(total - 1.0) > MASS_TOLERANCE:
            raise ValueError(f"density integrates to {total}, expected 1")
        bins.setflags(write=False)
        object.__setattr__(self, "bins", bins)

    @property
    def upper(self) -> float:
        return self.lower + self.bin_width * self.bins.size

    def same_binning(self, other: HistogramDensity) -> bool:
        return (
            self.lower == other.lower
            and self.bin_width == other.bin_width
            and self.bins.size == other.bins.size
        )

    def refined(self, factor: int = 2) -> HistogramDensity:
        """Split every bin into ``factor`` equal bins carrying the same density."""
        return HistogramDensity(self.lower, self.bin_width / factor, np.repeat(self.bins, factor))


def median(values: np.ndarray) -> float:
    # midpoint of the two central order statistics for even counts
    return float(np.median(values))


def fit_scaled_distribution(samples: Sequence[float], k_per_side: int = DEFAULT_K_PER_SIDE) -> ScaledDistribution:
    """Fit a distribution by per-side equal-mass quantiles around the median.

    Each side gets ``k_per_side`` regions.  A side holds the samples strictly
    on it plus half of the samples tied with the median, so the two sides'
    masses sum to one.  Boundaries sit at the side's equal-mass quantiles of
    distance from the center, the outermost at the side's extreme sample;
    nothing lies beyond it.
    """
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("empty sample set")
    if not np.all(np.isfinite(x)):
        raise ValueError("samples must be finite")
    if k_per_side < 1:
        raise ValueError("k_per_side must be >= 1")

    center = median(x)
    n = x.size
    ties = np.count_nonzero(x == center)
    sides = {}
    for sign in (-1, 1):
        dist = sign * (x - center)
        on_side = dist[dist >= 0]
        side_mass = (np.count_nonzero(dist > 0) + 0.5 * ties) / n
        levels = np.arange(1, k_per_side + 1) / k_per_side
        bounds = np.quantile(on_side, levels)
        bounds[-1] = on_side.max()
        # quantile interpolation can wobble by an ulp; keep boundaries monotone
        bounds = np.maximum.accumulate(bounds)
        widths = np.diff(bounds, prepend=0.0) + 0.0  # no -0.0
        sides[sign] = tuple(Region(float(w), side_mass / k_per_side) for w in widths)
    return ScaledDistribution(center, below=sides[-1], above=sides[1])


def fit_prototype(
    sample_matrix, k_per_side: int = DEFAULT_K_PER_SIDE, name: str | None = None
) -> Prototype:
    """Fit one distribution per feature column.

    ``sample_matrix`` is either a 2-d array of shape (observations, features)
    or a sequence of per-feature columns of equal length.
    """
    if isinstance(sample_matrix, np.ndarray):
        if sample_matrix.ndim != 2:
            raise ValueError("sample matrix must be 2-d (observations x features)")
        columns = [sample_matrix[:, j] for j in range(sample_matrix.shape[1])]
    else:
        columns = [np.asarray(c, dtype=float) for c in sample_matrix]
        lengths = {c.size for c in columns}
        if len(lengths) > 1:
            raise ValueError(f"ragged feature columns (lengths {sorted(lengths)})")
    if not columns:
        raise ValueError("need at least one feature column")
    return Prototype(tuple(fit_scaled_distribution(c, k_per_side) for c in columns), name=name)


def fit_histogram(samples: Sequence[float], bin_count: int, range: tuple[float, float]) -> HistogramDensity:
    """Normalized histogram; samples outside ``range`` land in the edge bins."""
    x = np.asarray(samples, dtype=float).ravel()
    if x.size == 0:
        raise ValueError("empty sample set")
    lo, hi = map(float, range)
    if not lo < hi:
        raise ValueError(f"histogram range needs lo < hi, got [{lo}, {hi}]")
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    width = (hi - lo) / bin_count
    idx = np.clip(np.floor((x - lo) / width), 0, bin_count - 1).astype(int)
    counts = np.bincount(idx, minlength=bin_count)
    return HistogramDensity(lo, width, counts / (x.size * width))
