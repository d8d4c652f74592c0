"""Random instance generators and independent oracles shared by the tests."""

import numpy as np

from unidist.distributions import Prototype, Region, ScaledDistribution


def random_distribution(rng, max_regions=4, center_scale=10.0, allow_zero_width=True):
    center = rng.uniform(-center_scale, center_scale)
    n_below = int(rng.integers(0, max_regions + 1))
    n_above = int(rng.integers(0, max_regions + 1))
    n = n_below + n_above
    masses = rng.dirichlet(np.ones(n + 1))[:n] if n else np.array([])
    widths = rng.exponential(2.0, size=n)
    if allow_zero_width:
        widths[rng.random(n) < 0.1] = 0.0
    regions = [Region(float(w), float(m)) for w, m in zip(widths, masses)]
    return ScaledDistribution(center, below=tuple(regions[:n_below]), above=tuple(regions[n_below:]))


def random_prototype(rng, e, **kw):
    return Prototype(tuple(random_distribution(rng, **kw) for _ in range(e)))


def with_masses(dist, mass):
    return ScaledDistribution(
        dist.center,
        below=tuple(Region(r.width, mass) for r in dist.below),
        above=tuple(Region(r.width, mass) for r in dist.above),
    )


def delta_on_boundary(dist, sign, index):
    """Correction for a query sitting on the ``index``-th scale of one side.

    Straight sum of width * mass over the regions numbered 0..index.
    """
    regions = dist.above if sign > 0 else dist.below
    return sum(regions[i].width * regions[i].mass for i in range(index + 1))


def delta_by_quadrature(query, dist, n=200_001):
    """Prorated correction as the integral of region mass along the path.

    Midpoint rule on a uniform grid from the center to the query.
    """
    if query == dist.center:
        return 0.0
    sign = 1 if query > dist.center else -1
    regions = dist.above if sign > 0 else dist.below
    edges = np.concatenate([[0.0], np.cumsum([r.width for r in regions])])
    masses = np.array([r.mass for r in regions] + [0.0])
    length = abs(query - dist.center)
    step = length / n
    mid = (np.arange(n) + 0.5) * step
    idx = np.searchsorted(edges, mid, side="right") - 1
    idx = np.clip(idx, 0, len(masses) - 1)
    # beyond the last edge there is no mass
    idx[mid >= edges[-1]] = len(masses) - 1
    return float(np.sum(masses[idx]) * step)
