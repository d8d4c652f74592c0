"""
Baseline divergences
====================

KL and Pearson depend on direction; L2 does not.
"""

import numpy as np

from unidist import fit_histogram, kl_divergence, l2_distance, pearson_divergence

rng = np.random.default_rng(1)
p = fit_histogram(rng.normal(0.0, 1.0, 20_000), 40, (-5.0, 6.0))
q = fit_histogram(rng.normal(1.0, 1.5, 20_000), 40, (-5.0, 6.0))

print("KL(p, q)      =", kl_divergence(p, q))
print("KL(q, p)      =", kl_divergence(q, p))
print("Pearson(p, q) =", pearson_divergence(p, q))
print("Pearson(q, p) =", pearson_divergence(q, p))
print("L2(p, q)      =", l2_distance(p, q), "=", l2_distance(q, p))
