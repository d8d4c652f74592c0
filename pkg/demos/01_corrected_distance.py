"""
Corrected distance on a single feature
======================================

A query approaching a distribution loses part of its raw distance to the
regions it crosses: each crossed region absorbs width x mass.
"""

import numpy as np

from unidist import DeltaMode, ScaledDistribution, corrected_coordinate_distance, delta_correction

# three regions above the center, innermost first: (width, mass)
dist = ScaledDistribution(0.0, below=[(1.0, 0.2), (2.0, 0.15), (4.0, 0.1)],
                          above=[(1.0, 0.2), (2.0, 0.15), (4.0, 0.1)])
print("scales above:", dist.scales(1))

# on a scale both modes agree
for q in dist.scales(1):
    print(f"q={q:4.1f}  prorated={delta_correction(q, dist):.3f}  "
          f"literal={delta_correction(q, dist, DeltaMode.LITERAL):.3f}")

# between scales the literal mode counts the whole region, the prorated mode only the part crossed
for q in np.linspace(0, 9, 10):
    b = corrected_coordinate_distance(q, dist)
    print(f"q={q:3.0f} raw={b.raw:4.1f} delta={b.delta:.3f} corrected={b.corrected:.3f} regions={b.regions_crossed}")
