"""ROC curve construction, area under the curve, and ideal-threshold selection.

The sweep visits every distinct observed score plus two sentinel thresholds,
one below the minimum score and one above the maximum, so the curve always
contains the (1,1) and (0,0) anchors.  This gives the exact step-function ROC
with no grid artifacts.  The ideal threshold is the sweep threshold whose
point lies closest (Euclidean) to the perfect-classifier corner (0,1).
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateClass
from .predictions import PredictionSet, class_partition


@dataclass(frozen=True)
class RocPoint:
    threshold: float
    fpr: float
    tpr: float


@dataclass(frozen=True)
class RocCurve:
    """Sweep points ordered by ascending fpr (ties by ascending tpr)."""

    points: tuple[RocPoint, ...]
    auc: float


@dataclass(frozen=True)
class IdealThreshold:
    """Closest-to-corner sweep result.

    ``degenerate`` flags curves that do no better than an anchor corner
    (distance >= 1), e.g. when every score is identical.
    """

    threshold: float
    point: RocPoint
    distance: float
    degenerate: bool


def corner_distance(fpr: float, tpr: float) -> float:
    """Euclidean distance from a ROC point to the top-left corner (0, 1)."""
    return math.sqrt(fpr * fpr + (1.0 - tpr) * (1.0 - tpr))


def build_roc(pred_set: PredictionSet) -> RocCurve:
    """Sweep every distinct score plus sentinels and collect (fpr, tpr) points."""
    x0, x1 = class_partition(pred_set)
    if len(x0) == 0 or len(x1) == 0:
        raise DegenerateClass(
            f"ROC needs both classes (|X0|={len(x0)}, |X1|={len(x1)})"
        )
    scores = pred_set.scores
    thresholds = np.unique(scores)
    thresholds = np.concatenate(
        ([thresholds[0] - 1.0], thresholds, [thresholds[-1] + 1.0])
    )

    neg_sorted = np.sort(x0)
    pos_sorted = np.sort(x1)
    # counts of scores >= th, via left bisection on the sorted class scores
    tp = len(x1) - np.searchsorted(pos_sorted, thresholds, side="left")
    fp = len(x0) - np.searchsorted(neg_sorted, thresholds, side="left")
    fpr = fp / len(x0)
    tpr = tp / len(x1)

    points = [
        RocPoint(threshold=float(t), fpr=float(x), tpr=float(y))
        for t, x, y in zip(thresholds, fpr, tpr)
    ]
    points.sort(key=lambda p: (p.fpr, p.tpr))
    return RocCurve(points=tuple(points), auc=_trapezoid(points))


def _trapezoid(points) -> float:
    total = 0.0
    for a, b in zip(points, points[1:]):
        total += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0
    return total


def auc(curve: RocCurve) -> float:
    """Trapezoidal area under the step curve, in [0, 1]."""
    return _trapezoid(sorted(curve.points, key=lambda p: (p.fpr, p.tpr)))


def ideal_threshold(curve: RocCurve) -> IdealThreshold:
    """Pick the sweep threshold minimizing the corner distance.

    Ties are broken by lower fpr, then by higher threshold.
    """
    best = min(
        curve.points,
        key=lambda p: (corner_distance(p.fpr, p.tpr), p.fpr, -p.threshold),
    )
    distance = corner_distance(best.fpr, best.tpr)
    return IdealThreshold(
        threshold=best.threshold,
        point=best,
        distance=distance,
        degenerate=distance >= 1.0,
    )


def point_at(curve: RocCurve, threshold: float) -> RocPoint:
    """(fpr, tpr) the classifier attains at an arbitrary threshold.

    Scores >= threshold behave exactly like scores >= the smallest sweep
    threshold at or above it, so the answer is always an existing sweep
    point; past the top sentinel it is the (0, 0) anchor.
    """
    at_or_above = [p for p in curve.points if p.threshold >= threshold]
    if not at_or_above:
        return RocPoint(threshold=float(threshold), fpr=0.0, tpr=0.0)
    nearest = min(at_or_above, key=lambda p: p.threshold)
    return RocPoint(threshold=float(threshold), fpr=nearest.fpr, tpr=nearest.tpr)


def roc_csv(curve: RocCurve) -> str:
    """`threshold,fpr,tpr` rows in curve order, full float precision."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["threshold", "fpr", "tpr"])
    for p in curve.points:
        writer.writerow([repr(p.threshold), repr(p.fpr), repr(p.tpr)])
    return out.getvalue()
