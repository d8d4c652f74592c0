"""
Competing prototypes
====================

Fit two prototypes from samples and decide a query with the ratio rule:
G(query, FV2) / G(query, FV1) <= 1 picks FV2.
"""

import numpy as np

from unidist import DeltaMode, QueryVector, classify_pair, euclidean_distance, fit_prototype, gu_distance

rng = np.random.default_rng(0)

# class 1 is tight, class 2 is broad in the first feature
fv1 = fit_prototype(rng.normal([0.0, 0.0], [0.3, 1.0], size=(300, 2)), name="FV1")
fv2 = fit_prototype(rng.normal([4.0, 0.0], [3.0, 1.0], size=(300, 2)), name="FV2")

sv = QueryVector([1.8, 0.2])
print("Euclidean:", euclidean_distance(sv, fv1), euclidean_distance(sv, fv2))
print("corrected:", gu_distance(sv, fv1).total, gu_distance(sv, fv2).total)

decision = classify_pair(sv, fv1, fv2, DeltaMode.PRORATED)
print(decision)

# the corrected distance is directional: it only looks at the destination's spread
report = gu_distance(sv, fv2)
for j, c in enumerate(report.per_coordinate):
    print(j, c)
