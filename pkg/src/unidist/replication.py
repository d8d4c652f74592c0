"""Recompute the published example totals, ratios and decisions.

Totals are plain sums over the twenty per-feature distances.  Where a
recomputed value disagrees with the printed one, the disagreement is
flagged and both numbers are kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import tables

RATIO_TOLERANCE = 0.01

METRICS = ("fv1_eu", "fv2_eu", "fv1_pr", "fv2_pr")


@dataclass(frozen=True)
class PaperExample:
    id: int
    fv1_e: tuple[float, ...]
    fv1_pr: tuple[float, ...]
    fv2_e: tuple[float, ...]
    fv2_pr: tuple[float, ...]
    real_mode: str

    def __post_init__(self):
        for name in ("fv1_e", "fv1_pr", "fv2_e", "fv2_pr"):
            row = tuple(getattr(self, name))
            if len(row) != 20:
                raise ValueError(f"example {self.id}: row {name} has {len(row)} entries, expected 20")
            object.__setattr__(self, name, row)
        if self.real_mode not in ("FV1", "FV2"):
            raise ValueError(f"real_mode must be FV1 or FV2, got {self.real_mode!r}")

    def pr_exceeds_e(self) -> set[tuple[int, str, int]]:
        """Cells where the corrected distance is larger than the raw one."""
        out = set()
        for proto in ("fv1", "fv2"):
            e_row = getattr(self, f"{proto}_e")
            pr_row = getattr(self, f"{proto}_pr")
            out |= {(self.id, proto, j) for j, (e, pr) in enumerate(zip(e_row, pr_row)) if pr > e}
        return out

    def totals(self) -> dict[str, float]:
        return {
            "fv1_eu": sum(self.fv1_e),
            "fv2_eu": sum(self.fv2_e),
            "fv1_pr": sum(self.fv1_pr),
            "fv2_pr": sum(self.fv2_pr),
        }


def load_paper_tables() -> list[PaperExample]:
    """The three published examples, with a consistency check on load.

    Raises if any cell other than the known printed anomaly has a corrected
    distance above its raw distance, which would point at a transcription
    error in the embedded data.
    """
    examples = []
    for ex_id, rows in tables.EXAMPLE_ROWS.items():
        flat = {name: tuple(first) + tuple(second) for name, (first, second) in rows.items()}
        examples.append(PaperExample(id=ex_id, real_mode=tables.REAL_MODE[ex_id], **flat))
    anomalies = set().union(*(ex.pr_exceeds_e() for ex in examples))
    if anomalies != tables.KNOWN_PR_EXCEEDS_E:
        raise ValueError(f"unexpected corrected > raw cells in embedded tables: {sorted(anomalies)}")
    return examples


def get_example(example_id: int) -> PaperExample:
    for ex in load_paper_tables():
        if ex.id == example_id:
            return ex
    raise KeyError(f"no example {example_id}; choose from 1, 2, 3")


def _winner(g1: float, g2: float) -> str:
    # smaller total wins; ratio g2/g1 <= 1 goes to FV2
    return "FV2" if g2 <= g1 else "FV1"


@dataclass(frozen=True)
class ReplicationReport:
    """Recomputed vs published figures for one example.

    ``ratio_from_published`` is FV1/FV2 built from the printed totals and is
    the one checked against the printed ratio.  ``ratio_from_computed`` uses
    the recomputed sums and is informational.
    """

    example_id: int
    real_mode: str
    computed_totals: dict[str, float]
    published_totals: dict[str, float]
    published_ratios: dict[str, float]
    ratio_from_published: dict[str, float]
    ratio_from_computed: dict[str, float]
    decisions: dict[str, str]
    decisions_from_published: dict[str, str]
    correct: dict[str, bool]
    flags: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "example_id": self.example_id,
            "real_mode": self.real_mode,
            "computed_totals": dict(self.computed_totals),
            "published_totals": dict(self.published_totals),
            "published_ratios": dict(self.published_ratios),
            "ratio_from_published": dict(self.ratio_from_published),
            "ratio_from_computed": dict(self.ratio_from_computed),
            "decisions": dict(self.decisions),
            "decisions_from_published": dict(self.decisions_from_published),
            "correct": dict(self.correct),
            "flags": list(self.flags),
        }

    CSV_HEADER = (
        ["example_id", "real_mode"]
        + [f"computed_{m}" for m in METRICS]
        + [f"published_{m}" for m in METRICS]
        + ["published_ratio_eu", "published_ratio_pr", "ratio_from_published_eu", "ratio_from_published_pr",
           "ratio_from_computed_eu", "ratio_from_computed_pr", "decision_eu", "decision_pr",
           "correct_eu", "correct_pr", "flags"]
    )

    def csv_row(self) -> list:
        return (
            [self.example_id, self.real_mode]
            + [self.computed_totals[m] for m in METRICS]
            + [self.published_totals[m] for m in METRICS]
            + [self.published_ratios["eu"], self.published_ratios["pr"],
               round(self.ratio_from_published["eu"], 6), round(self.ratio_from_published["pr"], 6),
               round(self.ratio_from_computed["eu"], 6), round(self.ratio_from_computed["pr"], 6),
               self.decisions["eu"], self.decisions["pr"],
               self.correct["eu"], self.correct["pr"], ";".join(self.flags)]
        )


def replicate_totals(example: PaperExample) -> ReplicationReport:
    computed = example.totals()
    published = dict(tables.PUBLISHED_TOTALS[example.id])
    printed_ratio = dict(tables.PUBLISHED_RATIOS[example.id])

    flags = [f"total_{m}" for m in METRICS if computed[m] != published[m]]

    def ratios(t):
        return {"eu": t["fv1_eu"] / t["fv2_eu"], "pr": t["fv1_pr"] / t["fv2_pr"]}

    from_published = ratios(published)
    flags += [
        f"ratio_{k}" for k in ("eu", "pr") if abs(from_published[k] - printed_ratio[k]) > RATIO_TOLERANCE
    ]

    decisions = {
        "eu": _winner(computed["fv1_eu"], computed["fv2_eu"]),
        "pr": _winner(computed["fv1_pr"], computed["fv2_pr"]),
    }
    decisions_pub = {
        "eu": _winner(published["fv1_eu"], published["fv2_eu"]),
        "pr": _winner(published["fv1_pr"], published["fv2_pr"]),
    }
    return ReplicationReport(
        example_id=example.id,
        real_mode=example.real_mode,
        computed_totals=computed,
        published_totals=published,
        published_ratios=printed_ratio,
        ratio_from_published=from_published,
        ratio_from_computed=ratios(computed),
        decisions=decisions,
        decisions_from_published=decisions_pub,
        correct={k: v == example.real_mode for k, v in decisions.items()},
        flags=tuple(flags),
    )


@dataclass(frozen=True)
class DecisionComparison:
    example_id: int
    real_mode: str
    euclidean: str
    probability: str
    euclidean_correct: bool
    probability_correct: bool
    matches_published_marks: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def replicate_decisions() -> list[DecisionComparison]:
    """Smaller-total decisions for each example, checked against the printed marks."""
    out = []
    for ex in load_paper_tables():
        rep = replicate_totals(ex)
        marks = tables.PUBLISHED_CORRECT[ex.id]
        out.append(
            DecisionComparison(
                example_id=ex.id,
                real_mode=ex.real_mode,
                euclidean=rep.decisions["eu"],
                probability=rep.decisions["pr"],
                euclidean_correct=rep.correct["eu"],
                probability_correct=rep.correct["pr"],
                matches_published_marks=(rep.correct["eu"] == marks["eu"] and rep.correct["pr"] == marks["pr"]),
            )
        )
    return out


@dataclass(frozen=True)
class ReplicationSet:
    reports: tuple[ReplicationReport, ...]

    @property
    def flags(self) -> list[tuple[int, str]]:
        return [(r.example_id, f) for r in self.reports for f in r.flags]

    def to_dict(self) -> dict:
        return {"examples": [r.to_dict() for r in self.reports]}

    def csv_header(self) -> list[str]:
        return list(ReplicationReport.CSV_HEADER)

    def csv_rows(self) -> list[list]:
        return [r.csv_row() for r in self.reports]


def replicate_all(example_ids: Sequence[int] | None = None) -> ReplicationSet:
    examples = load_paper_tables()
    if example_ids is not None:
        wanted = set(example_ids)
        unknown = wanted - {ex.id for ex in examples}
        if unknown:
            raise KeyError(f"no example(s) {sorted(unknown)}; choose from 1, 2, 3")
        examples = [ex for ex in examples if ex.id in wanted]
    return ReplicationSet(tuple(replicate_totals(ex) for ex in examples))
