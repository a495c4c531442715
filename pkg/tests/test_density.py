import math

import numpy as np
import pytest

from fakeval import (
    DEFAULT_GRID_INTERVAL,
    KdeModel,
    class_kdes,
    default_grid,
    density_curve,
    kde_eval,
    kde_intersections,
    pooled_kde,
    scott_bandwidth,
)
from fakeval.density import kde_csv
from fakeval.errors import ArgumentOutOfRange, DegenerateSamples

from helpers import build_set, random_set


def brute_kde(samples, h, x):
    total = 0.0
    for s in samples:
        u = (x - s) / h
        total += math.exp(-0.5 * u * u) / math.sqrt(2.0 * math.pi)
    return total / (len(samples) * h)


def test_scott_bandwidth_formula():
    # n = 32 makes the shrink factor 32^(-1/5) = 1/2 up to rounding
    rng = np.random.default_rng(30)
    samples = rng.random(32)
    sigma = float(np.std(samples, ddof=1))
    assert scott_bandwidth(samples) == pytest.approx(sigma / 2.0, rel=1e-14)
    more = rng.random(200)
    expected = float(np.std(more, ddof=1)) * 200 ** (-1.0 / 5.0)
    assert scott_bandwidth(more) == expected


def test_scott_bandwidth_rejects_degenerate():
    with pytest.raises(DegenerateSamples):
        scott_bandwidth(np.array([0.5]))
    with pytest.raises(DegenerateSamples):
        scott_bandwidth(np.array([0.3, 0.3, 0.3]))


def test_single_sample_peak_value():
    """One sample with h=1: density at the sample is the standard normal peak."""
    model = KdeModel(samples=np.array([0.4]), bandwidth=1.0)
    assert kde_eval(model, 0.4) == pytest.approx(1.0 / math.sqrt(2 * math.pi), abs=1e-12)


def test_kde_eval_matches_brute_force():
    rng = np.random.default_rng(31)
    samples = rng.random(25)
    model = KdeModel.from_samples(samples)
    xs = np.linspace(-0.2, 1.2, 17)
    got = kde_eval(model, xs)
    want = [brute_kde(samples, model.bandwidth, float(x)) for x in xs]
    np.testing.assert_allclose(got, want, atol=1e-12)


def test_kde_eval_scalar_returns_float():
    model = KdeModel(samples=np.array([0.1, 0.9]), bandwidth=0.2)
    out = kde_eval(model, 0.5)
    assert isinstance(out, float)


def test_kde_integral_close_to_one():
    rng = np.random.default_rng(32)
    for _ in range(10):
        samples = rng.random(int(rng.integers(5, 200)))
        model = KdeModel.from_samples(samples)
        grid = np.linspace(-1.0, 2.0, 8192)
        vals = kde_eval(model, grid)
        integral = np.trapezoid(vals, grid)
        assert abs(integral - 1.0) < 1e-3


def test_mixture_identity_shared_bandwidth():
    """pi0*f0 + pi1*f1 equals the pooled KDE when all three share a bandwidth."""
    rng = np.random.default_rng(33)
    ps = random_set(rng, 120)
    x0 = ps.scores[ps.labels == 0]
    x1 = ps.scores[ps.labels == 1]
    h = scott_bandwidth(ps.scores)
    f0 = KdeModel(samples=x0, bandwidth=h)
    f1 = KdeModel(samples=x1, bandwidth=h)
    pooled = KdeModel(samples=ps.scores, bandwidth=h)
    grid = default_grid()
    pi0 = len(x0) / len(ps.scores)
    pi1 = len(x1) / len(ps.scores)
    mix = pi0 * kde_eval(f0, grid) + pi1 * kde_eval(f1, grid)
    np.testing.assert_allclose(mix, kde_eval(pooled, grid), atol=1e-12)


def test_class_kdes_use_per_class_scott():
    rng = np.random.default_rng(34)
    ps = random_set(rng, 60)
    f0, f1 = class_kdes(ps)
    x0 = ps.scores[ps.labels == 0]
    x1 = ps.scores[ps.labels == 1]
    assert f0.bandwidth == scott_bandwidth(x0)
    assert f1.bandwidth == scott_bandwidth(x1)
    assert pooled_kde(ps).bandwidth == scott_bandwidth(ps.scores)


def test_mirror_classes_cross_at_half():
    """Mirror-image class samples force a crossing at exactly 0.5."""
    x0 = np.array([0.1, 0.2, 0.25, 0.3, 0.42])
    x1 = 1.0 - x0
    f0 = KdeModel(samples=x0, bandwidth=scott_bandwidth(x0))
    f1 = KdeModel(samples=x1, bandwidth=scott_bandwidth(x1))
    scan = kde_intersections(f0, f1, DEFAULT_GRID_INTERVAL)
    assert scan.found
    assert len(scan.crossings) == 1
    assert scan.crossings[0] == pytest.approx(0.5, abs=1e-6)


def test_identical_samples_indistinguishable():
    x = np.array([0.2, 0.5, 0.8])
    f0 = KdeModel(samples=x, bandwidth=0.1)
    f1 = KdeModel(samples=x.copy(), bandwidth=0.1)
    scan = kde_intersections(f0, f1, DEFAULT_GRID_INTERVAL)
    assert scan.indistinguishable
    assert not scan.found


def test_crossings_bracket_sign_changes():
    rng = np.random.default_rng(35)
    for _ in range(10):
        x0 = rng.normal(0.35, 0.08, size=40).clip(0.0, 1.0)
        x1 = rng.normal(0.65, 0.08, size=40).clip(0.0, 1.0)
        f0 = KdeModel.from_samples(x0)
        f1 = KdeModel.from_samples(x1)
        scan = kde_intersections(f0, f1, DEFAULT_GRID_INTERVAL)
        assert scan.found
        for c in scan.crossings:
            g = kde_eval(f0, c) - kde_eval(f1, c)
            assert abs(g) < 1e-6


def test_nearest_to_picks_closest_crossing():
    from fakeval import IntersectionScan

    scan = IntersectionScan(crossings=(0.2, 0.7), indistinguishable=False)
    assert scan.nearest_to(0.6) == 0.7
    assert scan.nearest_to(0.3) == 0.2


def test_intersections_argument_validation():
    f = KdeModel(samples=np.array([0.4, 0.6]), bandwidth=0.1)
    with pytest.raises(ArgumentOutOfRange):
        kde_intersections(f, f, (0.5, 0.5))
    with pytest.raises(ArgumentOutOfRange):
        kde_intersections(f, f, (0.0, 1.0), grid_n=2)


def test_density_curve_and_csv():
    model = KdeModel(samples=np.array([0.3, 0.7]), bandwidth=0.2)
    grid = default_grid(grid_n=16)
    c_all = density_curve(model, grid, "all")
    c0 = density_curve(model, grid, "class0")
    c1 = density_curve(model, grid, "class1")
    text = kde_csv(c_all, c0, c1)
    lines = text.splitlines()
    assert lines[0] == "x,f_all,f0,f1"
    assert len(lines) == 17
    other = density_curve(model, default_grid(grid_n=8), "class0")
    with pytest.raises(ArgumentOutOfRange):
        kde_csv(c_all, other, c1)
