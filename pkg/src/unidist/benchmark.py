"""Seeded two-class Gaussian recognition benchmark.

Each trial draws two class means ``separation`` apart along a random
direction, fits one prototype per class from ``samples`` draws, then
classifies ``queries`` fresh labelled points (alternating classes) by
smallest Euclidean distance and by smallest corrected distance.

Trial ``t`` draws from its own stream seeded by ``(seed, t)``, so results
do not depend on the order or concurrency of trial evaluation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .classifier import classify_multi
from .distance import AggregateMode, DeltaMode, euclidean_distance
from .distributions import DEFAULT_K_PER_SIDE, QueryVector, fit_prototype


@dataclass(frozen=True)
class BenchConfig:
    features: int = 4
    separation: float = 1.0
    spread: float = 1.0
    samples: int = 200
    queries: int = 1000
    trials: int = 1
    k_per_side: int = DEFAULT_K_PER_SIDE
    seed: int = 0
    mode: DeltaMode = DeltaMode.PRORATED
    agg: AggregateMode = AggregateMode.L2

    def __post_init__(self):
        object.__setattr__(self, "mode", DeltaMode(self.mode))
        object.__setattr__(self, "agg", AggregateMode(self.agg))
        for name in ("features", "samples", "queries", "trials", "k_per_side"):
            value = getattr(self, name)
            if int(value) != value or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value}")
        if not self.separation >= 0:
            raise ValueError("separation must be >= 0")
        if not self.spread > 0:
            raise ValueError("spread must be positive")
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")

    def to_dict(self) -> dict:
        d = asdict(self)
        d["mode"] = self.mode.value
        d["agg"] = self.agg.value
        return d


@dataclass(frozen=True)
class TrialSummary:
    """Per-trial accuracies and mean margins.

    The margin of a correctly classified query is
    ``(g_other - g_own) / (g_other + g_own)``, a bounded monotone image of the
    competitive ratio ``g_other / g_own`` (0 when both distances are 0).
    It stays finite when the own-class distance is zero.
    """

    trial: int
    accuracy_euclidean: float
    accuracy_gu: float
    margin_euclidean: float
    margin_gu: float

    CSV_HEADER = ("trial", "accuracy_euclidean", "accuracy_gu", "margin_euclidean", "margin_gu")

    def csv_row(self) -> list:
        return [self.trial, self.accuracy_euclidean, self.accuracy_gu, self.margin_euclidean, self.margin_gu]


@dataclass(frozen=True)
class BenchmarkReport:
    config: dict
    trials: tuple[TrialSummary, ...]

    @property
    def accuracy_euclidean(self) -> float:
        return float(np.mean([t.accuracy_euclidean for t in self.trials])) if self.trials else float("nan")

    @property
    def accuracy_gu(self) -> float:
        return float(np.mean([t.accuracy_gu for t in self.trials])) if self.trials else float("nan")

    def to_dict(self) -> dict:
        return {
            "config": dict(self.config),
            "trials": [asdict(t) for t in self.trials],
            "accuracy_euclidean": self.accuracy_euclidean if self.trials else None,
            "accuracy_gu": self.accuracy_gu if self.trials else None,
        }

    def csv_header(self) -> list[str]:
        return list(TrialSummary.CSV_HEADER)

    def csv_rows(self) -> list[list]:
        return [t.csv_row() for t in self.trials]


def _margin(g_own: float, g_other: float) -> float:
    total = g_own + g_other
    return 0.0 if total == 0 else (g_other - g_own) / total


def run_trial(config: BenchConfig, trial: int) -> TrialSummary:
    rng = np.random.default_rng(np.random.SeedSequence([config.seed, trial]))
    e = config.features
    direction = rng.normal(size=e)
    direction /= np.linalg.norm(direction)
    means = np.stack([np.zeros(e), config.separation * direction])

    protos = [
        fit_prototype(rng.normal(means[c], config.spread, size=(config.samples, e)), config.k_per_side, name=str(c))
        for c in (0, 1)
    ]

    labels = np.arange(config.queries) % 2
    points = means[labels] + rng.normal(0.0, config.spread, size=(config.queries, e))

    hits = {"euclidean": 0, "gu": 0}
    margins = {"euclidean": [], "gu": []}
    for label, point in zip(labels, points):
        sv = QueryVector(point)
        g_eu = [euclidean_distance(sv, p, config.agg) for p in protos]
        decision = classify_multi(sv, protos, config.mode, config.agg)
        g_gu = [decision.g_values["0"], decision.g_values["1"]]
        winners = {"euclidean": 0 if g_eu[0] <= g_eu[1] else 1, "gu": int(decision.label)}
        for key, g in (("euclidean", g_eu), ("gu", g_gu)):
            if winners[key] == label:
                hits[key] += 1
                margins[key].append(_margin(g[label], g[1 - label]))

    def mean_or_zero(v):
        return float(np.mean(v)) if v else 0.0

    return TrialSummary(
        trial=trial,
        accuracy_euclidean=hits["euclidean"] / config.queries,
        accuracy_gu=hits["gu"] / config.queries,
        margin_euclidean=mean_or_zero(margins["euclidean"]),
        margin_gu=mean_or_zero(margins["gu"]),
    )


def run_synthetic_benchmark(config: BenchConfig, workers: int = 1) -> BenchmarkReport:
    if workers < 1:
        raise ValueError("workers must be >= 1")
    indices = range(config.trials)
    if workers == 1:
        summaries = [run_trial(config, t) for t in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            summaries = list(pool.map(lambda t: run_trial(config, t), indices))
    return BenchmarkReport(config.to_dict(), tuple(summaries))
