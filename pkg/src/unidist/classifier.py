"""Competitive nearest-prototype decisions under the corrected distance."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .distance import AggregateMode, DeltaMode, gu_distance
from .distributions import Prototype, QueryVector


@dataclass(frozen=True)
class Decision:
    label: str
    ratio: float
    g_values: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            # JSON has no infinity literal
            "ratio": self.ratio if math.isfinite(self.ratio) else "inf",
            "g_values": dict(self.g_values),
        }


def ratio_of_totals(g1: float, g2: float) -> float:
    """``g2 / g1``, with ``x / 0 = inf`` for ``x > 0`` and ``0 / 0 = 1``."""
    if g1 == 0:
        return 1.0 if g2 == 0 else math.inf
    return g2 / g1


def competitive_ratio(
    sv: QueryVector,
    fv1: Prototype,
    fv2: Prototype,
    mode: DeltaMode = DeltaMode.PRORATED,
    agg: AggregateMode = AggregateMode.L2,
) -> float:
    """G(sv, fv2) / G(sv, fv1).  At most 1 means ``sv`` goes to ``fv2``."""
    g1 = gu_distance(sv, fv1, mode, agg).total
    g2 = gu_distance(sv, fv2, mode, agg).total
    return ratio_of_totals(g1, g2)


def classify_pair(
    sv: QueryVector,
    fv1: Prototype,
    fv2: Prototype,
    mode: DeltaMode = DeltaMode.PRORATED,
    agg: AggregateMode = AggregateMode.L2,
) -> Decision:
    label1 = fv1.name or "FV1"
    label2 = fv2.name or "FV2"
    if label1 == label2:
        raise ValueError(f"both prototypes are labelled {label1!r}")
    g1 = gu_distance(sv, fv1, mode, agg).total
    g2 = gu_distance(sv, fv2, mode, agg).total
    c = ratio_of_totals(g1, g2)
    return Decision(label2 if c <= 1 else label1, c, {label1: g1, label2: g2})


def classify_multi(
    sv: QueryVector,
    protos: Sequence[Prototype],
    mode: DeltaMode = DeltaMode.PRORATED,
    agg: AggregateMode = AggregateMode.L2,
) -> Decision:
    """Assign ``sv`` to the prototype at smallest G; ties go to the lowest index.

    ``ratio`` is runner-up G over winning G (1.0 with a single prototype),
    so it is at least 1 and grows with the decision margin.
    """
    protos = list(protos)
    if not protos:
        raise ValueError("need at least one prototype")
    labels = [p.name or str(i) for i, p in enumerate(protos)]
    if len(set(labels)) != len(labels):
        raise ValueError("prototype labels must be unique")
    g = np.array([gu_distance(sv, p, mode, agg).total for p in protos])
    best = int(np.argmin(g))
    if len(g) == 1:
        ratio = 1.0
    else:
        runner_up = float(np.min(np.delete(g, best)))
        ratio = ratio_of_totals(float(g[best]), runner_up)
    return Decision(labels[best], ratio, {lab: float(v) for lab, v in zip(labels, g)})
