"""
Replicating the published example tables
========================================

Totals are recomputed as plain sums of the twenty per-feature distances and
compared with the printed totals and ratios.
"""

import sys

from unidist.fileio import emit_report
from unidist.replication import replicate_all, replicate_decisions

report = replicate_all()
for rep in report.reports:
    print(f"example {rep.example_id}: computed {rep.computed_totals}")
    print(f"           published {rep.published_totals}  flags={list(rep.flags)}")

for d in replicate_decisions():
    print(f"example {d.example_id} (real {d.real_mode}): Euclidean -> {d.euclidean} "
          f"({'right' if d.euclidean_correct else 'wrong'}), corrected -> {d.probability} "
          f"({'right' if d.probability_correct else 'wrong'})")

emit_report(report, "csv", sys.stdout)
