"""KL, Pearson and L2 divergences between binned densities."""

from __future__ import annotations

import numpy as np

from .distributions import HistogramDensity

DEFAULT_EPSILON = 1e-9


def _check_binning(p: HistogramDensity, q: HistogramDensity):
    if not p.same_binning(q):
        raise ValueError(
            "binning mismatch: "
            f"({p.lower}, {p.bin_width}, {p.bins.size}) vs ({q.lower}, {q.bin_width}, {q.bins.size})"
        )


def smooth(h: HistogramDensity, epsilon: float = DEFAULT_EPSILON) -> np.ndarray:
    """Add ``epsilon`` to every bin and renormalize to unit integral."""
    if not epsilon > 0:
        raise ValueError("epsilon must be positive")
    b = h.bins + epsilon
    return b / (np.sum(b) * h.bin_width)


def kl_divergence(p: HistogramDensity, q: HistogramDensity, epsilon: float = DEFAULT_EPSILON) -> float:
    """sum p log(p / q) dx over smoothed densities, natural log."""
    _check_binning(p, q)
    ps, qs = smooth(p, epsilon), smooth(q, epsilon)
    return float(np.sum(ps * np.log(ps / qs)) * p.bin_width)


def pearson_divergence(p: HistogramDensity, q: HistogramDensity, epsilon: float = DEFAULT_EPSILON) -> float:
    """sum q (p / q - 1)^2 dx over smoothed densities."""
    _check_binning(p, q)
    ps, qs = smooth(p, epsilon), smooth(q, epsilon)
    return float(np.sum(qs * (ps / qs - 1.0) ** 2) * p.bin_width)


def l2_distance(p: HistogramDensity, q: HistogramDensity) -> float:
    """sum (p - q)^2 dx; finite without smoothing."""
    _check_binning(p, q)
    return float(np.sum((p.bins - q.bins) ** 2) * p.bin_width)
