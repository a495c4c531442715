import math

import numpy as np
import pytest

from fakeval import (
    auc,
    build_roc,
    class_partition,
    corner_distance,
    ideal_threshold,
    point_at,
)
from fakeval.errors import DegenerateClass
from fakeval.roc import roc_csv

from helpers import build_set, random_set


def rank_statistic(x0, x1):
    """All-pairs Mann-Whitney AUC: P(score1 > score0) + 0.5 P(equal)."""
    wins = 0.0
    for a in x1:
        for b in x0:
            if a > b:
                wins += 1.0
            elif a == b:
                wins += 0.5
    return wins / (len(x0) * len(x1))


def test_anchors_present():
    ps = build_set([(0, 0.2), (0, 0.4), (1, 0.6), (1, 0.8)])
    curve = build_roc(ps)
    assert (curve.points[0].fpr, curve.points[0].tpr) == (0.0, 0.0)
    assert (curve.points[-1].fpr, curve.points[-1].tpr) == (1.0, 1.0)


def test_separable_set_is_perfect():
    ps = build_set([(0, 0.1), (0, 0.2), (1, 0.8), (1, 0.9)])
    curve = build_roc(ps)
    assert curve.auc == 1.0
    it = ideal_threshold(curve)
    assert it.point.fpr == 0.0 and it.point.tpr == 1.0
    assert it.distance == 0.0
    assert not it.degenerate


def test_reversed_scores_give_zero_auc():
    ps = build_set([(1, 0.1), (1, 0.2), (0, 0.8), (0, 0.9)])
    assert build_roc(ps).auc == 0.0


def test_single_class_rejected():
    with pytest.raises(DegenerateClass):
        build_roc(build_set([(1, 0.5), (1, 0.6)]))


def test_auc_equals_rank_statistic():
    """Trapezoidal area must agree with the all-pairs statistic, ties included."""
    rng = np.random.default_rng(21)
    for trial in range(60):
        ps = random_set(rng, int(rng.integers(2, 60)), tie_bins=6)
        x0, x1 = class_partition(ps)
        curve = build_roc(ps)
        assert curve.auc == pytest.approx(rank_statistic(x0, x1), abs=1e-9)


def test_ideal_threshold_exhaustive_oracle():
    rng = np.random.default_rng(22)
    for trial in range(30):
        ps = random_set(rng, int(rng.integers(2, 50)), tie_bins=10)
        curve = build_roc(ps)
        it = ideal_threshold(curve)
        best = min(corner_distance(p.fpr, p.tpr) for p in curve.points)
        assert it.distance == best
        # tie-break: no sweep point at the same distance has lower fpr,
        # and none with the same (distance, fpr) has a higher threshold
        for p in curve.points:
            d = corner_distance(p.fpr, p.tpr)
            if d == best:
                assert it.point.fpr <= p.fpr
                if p.fpr == it.point.fpr:
                    assert it.threshold >= p.threshold


def test_all_same_score_degenerate():
    ps = build_set([(0, 0.5), (0, 0.5), (1, 0.5)])
    it = ideal_threshold(build_roc(ps))
    assert it.degenerate
    assert it.distance >= 1.0


def test_monotone_curve():
    rng = np.random.default_rng(23)
    ps = random_set(rng, 40, tie_bins=5)
    pts = build_roc(ps).points
    for a, b in zip(pts, pts[1:]):
        assert b.fpr >= a.fpr
        assert b.tpr >= a.tpr


def test_auc_recompute_matches_stored():
    rng = np.random.default_rng(24)
    ps = random_set(rng, 30)
    curve = build_roc(ps)
    assert auc(curve) == curve.auc


def test_point_at_interpolates_step():
    ps = build_set([(0, 0.2), (0, 0.4), (1, 0.4), (1, 0.8)])
    curve = build_roc(ps)
    # any threshold in (0.4, 0.8] behaves like the sweep point at 0.8
    p = point_at(curve, 0.6)
    assert (p.fpr, p.tpr) == (0.0, 0.5)
    # above every score: the (0,0) anchor
    p = point_at(curve, 5.0)
    assert (p.fpr, p.tpr) == (0.0, 0.0)


def test_roc_csv_header_and_rows():
    ps = build_set([(0, 0.2), (1, 0.8)])
    curve = build_roc(ps)
    lines = roc_csv(curve).splitlines()
    assert lines[0] == "threshold,fpr,tpr"
    assert len(lines) == 1 + len(curve.points)


def test_corner_distance_formula():
    assert corner_distance(0.0, 1.0) == 0.0
    assert corner_distance(1.0, 1.0) == 1.0
    assert corner_distance(0.3, 0.6) == pytest.approx(math.sqrt(0.09 + 0.16))
