"""Probability-corrected distances between feature vectors and learned prototypes."""

__version__ = "0.1.0"

from .classifier import Decision, classify_multi, classify_pair, competitive_ratio, ratio_of_totals
from .distance import (
    AggregateMode,
    CoordinateBreakdown,
    DeltaMode,
    DistanceReport,
    corrected_coordinate_distance,
    delta_correction,
    euclidean_distance,
    gu_distance,
)
from .distributions import (
    HistogramDensity,
    Prototype,
    QueryVector,
    Region,
    ScaledDistribution,
    fit_histogram,
    fit_prototype,
    fit_scaled_distribution,
)
from .divergences import kl_divergence, l2_distance, pearson_divergence
