import numpy as np
import pytest

from unidist.distributions import (
    HistogramDensity,
    Prototype,
    Region,
    ScaledDistribution,
    fit_histogram,
    fit_prototype,
    fit_scaled_distribution,
)


def quantile_oracle(samples, k):
    """Boundaries by sorting and interpolating order statistics by hand."""
    x = sorted(samples)
    n = len(x)
    c = (x[(n - 1) // 2] + x[n // 2]) / 2
    out = {}
    for sign in (-1, 1):
        d = sorted(sign * (v - c) for v in x if sign * (v - c) >= 0)
        bounds = []
        for r in range(1, k + 1):
            pos = r / k * (len(d) - 1)
            lo = int(np.floor(pos))
            hi = min(lo + 1, len(d) - 1)
            bounds.append(d[lo] + (pos - lo) * (d[hi] - d[lo]))
        bounds[-1] = d[-1]
        out[sign] = [b - a for a, b in zip([0.0] + bounds[:-1], bounds)]
    return c, out


def test_region_validation():
    with pytest.raises(ValueError):
        Region(-1.0, 0.5)
    with pytest.raises(ValueError):
        Region(1.0, 1.5)


def test_distribution_rejects_excess_mass():
    with pytest.raises(ValueError, match="masses"):
        ScaledDistribution(0.0, below=[(1, 0.6)], above=[(1, 0.6)])
    # tolerance of 1e-9 on the total
    ScaledDistribution(0.0, below=[(1, 0.5)], above=[(1, 0.5 + 5e-10)])


def test_scales_are_center_plus_cumulative_widths():
    d = ScaledDistribution(10.0, below=[(1, 0.1), (2, 0.1)], above=[(3, 0.2), (4, 0.2)])
    np.testing.assert_array_equal(d.scales(1), [13.0, 17.0])
    np.testing.assert_array_equal(d.scales(-1), [9.0, 7.0])


def test_fit_identical_samples_is_degenerate():
    d = fit_scaled_distribution([5, 5, 5, 5], 1)
    assert d.center == 5
    assert all(r.width == 0 for r in d.below + d.above)
    assert d.is_degenerate


def test_fit_zero_to_ten_single_region():
    d = fit_scaled_distribution(range(11), 1)
    assert d.center == 5
    assert [r.width for r in d.below] == [5]
    assert [r.width for r in d.above] == [5]
    assert d.below[0].mass == pytest.approx(0.5)
    assert d.above[0].mass == pytest.approx(0.5)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_fit_matches_quantile_oracle(k, seed):
    x = np.random.default_rng(seed).gamma(2.0, size=37 + seed)
    c, widths = quantile_oracle(list(x), k)
    d = fit_scaled_distribution(x, k)
    assert d.center == pytest.approx(c)
    np.testing.assert_allclose([r.width for r in d.below], widths[-1], atol=1e-12)
    np.testing.assert_allclose([r.width for r in d.above], widths[1], atol=1e-12)


def test_fit_even_count_median_is_midpoint():
    d = fit_scaled_distribution([1.0, 2.0, 4.0, 10.0], 1)
    assert d.center == 3.0
    assert d.below[0].width == 2.0
    assert d.above[0].width == 7.0
    assert d.below[0].mass == d.above[0].mass == 0.5


def test_fit_symmetric_samples_mirror():
    x = np.array([-4.0, -2.5, -1.0, -0.3, 0.0, 0.3, 1.0, 2.5, 4.0])
    d = fit_scaled_distribution(x, 2)
    assert d.center == 0.0
    assert d.below == d.above


def test_fit_truncates_at_extremes():
    x = [0.0, 1.0, 2.0, 3.0, 100.0]
    d = fit_scaled_distribution(x, 3)
    assert d.scales(1)[-1] == 100.0
    assert d.scales(-1)[-1] == 0.0


def test_fit_skewed_masses_follow_side_fractions():
    x = [0.0, 2.0, 2.0, 3.0, 4.0, 5.0]
    d = fit_scaled_distribution(x, 2)
    assert d.center == 2.5
    assert sum(r.mass for r in d.below) == pytest.approx(0.5)
    # three samples tie with the median; each side takes half of them
    x = [0, 1, 2, 2, 2, 3, 9]
    d = fit_scaled_distribution(x, 1)
    assert d.below[0].mass == pytest.approx((2 + 1.5) / 7)
    assert d.above[0].mass == pytest.approx((2 + 1.5) / 7)


def test_fit_errors():
    with pytest.raises(ValueError, match="empty sample set"):
        fit_scaled_distribution([], 3)
    with pytest.raises(ValueError):
        fit_scaled_distribution([1.0], 0)
    with pytest.raises(ValueError):
        fit_scaled_distribution([1.0, np.nan], 1)


def test_fit_prototype_constant_columns():
    p = fit_prototype([[3.0] * 5, [7.0] * 5])
    np.testing.assert_array_equal(p.centers, [3.0, 7.0])
    assert all(f.is_degenerate for f in p.features)


def test_fit_prototype_columns_are_independent():
    a = np.arange(11.0)
    b = np.arange(100.0, 111.0)
    p = fit_prototype(np.column_stack([a, b]), 1)
    assert p.features[0] == fit_scaled_distribution(a, 1)
    assert p.features[1] == fit_scaled_distribution(b, 1)
    assert p.features[1].center == 105.0
    assert p.features[1].above[0].width == 5.0


def test_fit_prototype_single_feature_identity():
    x = np.random.default_rng(3).normal(size=50)
    assert fit_prototype([x], 3).features == (fit_scaled_distribution(x, 3),)


def test_fit_prototype_errors():
    with pytest.raises(ValueError, match="ragged"):
        fit_prototype([[1.0, 2.0], [1.0]])
    with pytest.raises(ValueError):
        fit_prototype([])
    with pytest.raises(ValueError, match="empty"):
        fit_prototype([[], []])


def test_prototype_json_roundtrip():
    p = fit_prototype(np.random.default_rng(0).normal(size=(30, 3)), 2, name="a")
    q = Prototype.from_dict(p.to_dict())
    assert q == p and q.name == "a"


def test_histogram_single_bin_mass():
    h = fit_histogram([0.1, 0.2, 0.3], 4, (0.0, 2.0))
    np.testing.assert_array_equal(h.bins, [2.0, 0.0, 0.0, 0.0])


def test_histogram_midpoints_uniform():
    h = fit_histogram([0.5, 1.5, 2.5, 3.5], 4, (0.0, 4.0))
    np.testing.assert_allclose(h.bins, 0.25)


def test_histogram_normal_samples_normalized():
    x = np.random.default_rng(0).standard_normal(1000)
    h = fit_histogram(x, 20, (-4.0, 4.0))
    assert abs(h.bins.sum() * h.bin_width - 1.0) <= 1e-9


def test_histogram_clips_out_of_range():
    h = fit_histogram([-10.0, 0.5, 99.0], 2, (0.0, 2.0))
    np.testing.assert_allclose(h.bins * 3, [2.0, 1.0])


def test_histogram_errors():
    with pytest.raises(ValueError, match="empty"):
        fit_histogram([], 3, (0, 1))
    with pytest.raises(ValueError, match="lo < hi"):
        fit_histogram([1.0], 3, (1, 1))
    with pytest.raises(ValueError):
        HistogramDensity(0.0, 1.0, [0.5, 0.2])
    with pytest.raises(ValueError, match="finite"):
        HistogramDensity(0.0, 1.0, [np.nan, 1.0])


def test_histogram_refined_keeps_values():
    h = fit_histogram([0.1, 0.7, 1.2], 2, (0.0, 2.0))
    r = h.refined()
    assert r.bins.size == 4 and r.bin_width == 0.5
    np.testing.assert_array_equal(r.bins, [h.bins[0]] * 2 + [h.bins[1]] * 2)
