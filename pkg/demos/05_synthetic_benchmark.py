"""
Synthetic recognition benchmark
===============================

Two Gaussian classes at increasing separation; accuracy of smallest
Euclidean distance vs smallest corrected distance.
"""

from unidist.benchmark import BenchConfig, run_synthetic_benchmark

for separation in (0.0, 0.5, 1.0, 2.0, 4.0):
    cfg = BenchConfig(features=4, separation=separation, samples=200, queries=1000, trials=3, seed=42)
    r = run_synthetic_benchmark(cfg, workers=3)
    print(f"separation {separation:3.1f}: euclidean {r.accuracy_euclidean:.3f}  corrected {r.accuracy_gu:.3f}")
