"""Probability-corrected coordinate distances and their aggregates.

Travelling from a query point toward a distribution's center, part of the
raw distance is absorbed by the regions passed on the way: each crossed
region absorbs its width times its probability mass.  The coordinate
distance is the raw distance shrunk by that correction and clamped at zero.

The correction depends only on the destination distribution, so the
resulting distance is directional: ``G(w -> V)`` and ``G(v -> W)`` differ
in general.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .distributions import Prototype, QueryVector, ScaledDistribution


class DeltaMode(str, enum.Enum):
    """How the region holding the query contributes to the correction.

    ``PRORATED`` counts only the part of that region actually traversed,
    which makes the correction continuous in the query position.
    ``LITERAL`` counts the whole region.  Both agree on scale boundaries.
    """

    PRORATED = "prorated"
    LITERAL = "literal"


class AggregateMode(str, enum.Enum):
    L2 = "l2"
    L1 = "l1"


@dataclass(frozen=True)
class CoordinateBreakdown:
    raw: float
    delta: float
    corrected: float
    regions_crossed: int

    def to_dict(self) -> dict:
        return {
            "raw": self.raw,
            "delta": self.delta,
            "corrected": self.corrected,
            "regions_crossed": self.regions_crossed,
        }


@dataclass(frozen=True)
class DistanceReport:
    per_coordinate: tuple[CoordinateBreakdown, ...]
    total: float
    aggregate_mode: AggregateMode

    def to_dict(self) -> dict:
        return {
            "per_coordinate": [c.to_dict() for c in self.per_coordinate],
            "total": self.total,
            "aggregate_mode": self.aggregate_mode.value,
        }


def _regions_toward_center(query: float, dist: ScaledDistribution, mode: DeltaMode) -> tuple[float, int]:
    if query == dist.center:
        return 0.0, 0
    sign = 1 if query > dist.center else -1
    regions = dist.side(sign)
    # boundaries in absolute coordinates so a query placed on a scale compares exactly
    scales = dist.scales(sign).tolist()
    delta = 0.0
    crossed = 0
    inner = dist.center
    for region, outer in zip(regions, scales):
        past_outer = sign * (query - outer)
        if past_outer >= 0:
            delta += region.width * region.mass
            crossed += 1
        else:
            if sign * (query - inner) > 0:
                crossed += 1
                if mode is DeltaMode.LITERAL:
                    delta += region.width * region.mass
                else:
                    delta += abs(query - inner) * region.mass
            break
        inner = outer
    return delta, crossed


def delta_correction(query: float, dist: ScaledDistribution, mode: DeltaMode = DeltaMode.PRORATED) -> float:
    """Distance absorbed by ``dist`` on the way from ``query`` to its center.

    Sum of width times mass over the regions between the query and the
    center.  Space beyond the outermost scale carries no mass and absorbs
    nothing.
    """
    return _regions_toward_center(float(query), dist, DeltaMode(mode))[0]


def shrink(raw: float, delta: float) -> float:
    return 0.0 if raw <= delta else raw - delta


def corrected_coordinate_distance(
    query: float, dist: ScaledDistribution, mode: DeltaMode = DeltaMode.PRORATED
) -> CoordinateBreakdown:
    query = float(query)
    raw = abs(query - dist.center)
    delta, crossed = _regions_toward_center(query, dist, DeltaMode(mode))
    return CoordinateBreakdown(raw, delta, shrink(raw, delta), crossed)


def aggregate(values, agg: AggregateMode = AggregateMode.L2) -> float:
    v = np.asarray(values, dtype=float)
    if AggregateMode(agg) is AggregateMode.L1:
        return float(np.sum(v))
    return float(np.sqrt(np.sum(v * v)))


def _check_dims(query: QueryVector, proto: Prototype):
    if len(query) != len(proto):
        raise ValueError(f"dimension mismatch: query has {len(query)} coordinates, prototype {len(proto)}")


def gu_distance(
    query: QueryVector,
    proto: Prototype,
    mode: DeltaMode = DeltaMode.PRORATED,
    agg: AggregateMode = AggregateMode.L2,
) -> DistanceReport:
    """Corrected distance from ``query`` to ``proto``, with a per-coordinate breakdown.

    Only ``proto``'s distributions enter; the query is a bare point.
    """
    _check_dims(query, proto)
    agg = AggregateMode(agg)
    rows = tuple(corrected_coordinate_distance(q, f, mode) for q, f in zip(query.coords, proto.features))
    return DistanceReport(rows, aggregate([r.corrected for r in rows], agg), agg)


def euclidean_distance(query: QueryVector, proto: Prototype, agg: AggregateMode = AggregateMode.L2) -> float:
    """Distance to the prototype centers with every correction forced to zero."""
    _check_dims(query, proto)
    raws = [shrink(abs(q - f.center), 0.0) for q, f in zip(query.coords, proto.features)]
    return aggregate(raws, agg)
