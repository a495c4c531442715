"""Threshold mapping, confusion counting, and scalar performance metrics.

A raw score is mapped to a predicted label by comparing it with a threshold,
inclusively: score >= th predicts the positive (fake) class.  Confusion cells
and the derived rates/metrics all follow from that single rule.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentOutOfRange, DegenerateClass
from .predictions import PredictionSet, require_nonempty


@dataclass(frozen=True)
class ConfusionCounts:
    """Confusion-matrix cells at one threshold."""

    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self):
        for name in ("tp", "fp", "tn", "fn"):
            if getattr(self, name) < 0:
                raise ArgumentOutOfRange(f"{name} must be non-negative")

    @property
    def positives(self) -> int:
        """Records whose true label is 1 (threshold-independent)."""
        return self.tp + self.fn

    @property
    def negatives(self) -> int:
        """Records whose true label is 0 (threshold-independent)."""
        return self.fp + self.tn

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True)
class MetricsBundle:
    """Scalar metrics evaluated at one threshold.

    ``degenerate`` is set when no positive predictions exist (tp + fp = 0);
    precision and f1 are then defined as 0 rather than left undefined.
    """

    threshold: float
    accuracy: float
    precision: float
    recall: float
    f1: float
    fpr: float
    tpr: float
    degenerate: bool = False


def apply_threshold(score: float, th: float) -> int:
    """Map a raw score to a predicted label: 1 iff score >= th, else 0."""
    if not (0.0 <= score <= 1.0):
        raise ArgumentOutOfRange(f"score must lie in [0, 1], got {score!r}")
    if not (0.0 <= th <= 1.0):
        raise ArgumentOutOfRange(f"threshold must lie in [0, 1], got {th!r}")
    return 1 if score >= th else 0


def confusion(pred_set: PredictionSet, th: float) -> ConfusionCounts:
    """Tally every record into exactly one confusion cell at threshold th."""
    require_nonempty(pred_set)
    labels = pred_set.labels
    predicted = pred_set.scores >= th
    actual = labels == 1
    tp = int(np.count_nonzero(predicted & actual))
    fp = int(np.count_nonzero(predicted & ~actual))
    fn = int(np.count_nonzero(~predicted & actual))
    tn = int(np.count_nonzero(~predicted & ~actual))
    return ConfusionCounts(tp=tp, fp=fp, tn=tn, fn=fn)


def rates(c: ConfusionCounts) -> tuple[float, float]:
    """False positive rate fp/N and true positive rate tp/P."""
    if c.positives == 0 or c.negatives == 0:
        raise DegenerateClass(
            f"rates need both classes populated (P={c.positives}, N={c.negatives})"
        )
    return c.fp / c.negatives, c.tp / c.positives


def scalar_metrics(c: ConfusionCounts, th: float) -> MetricsBundle:
    """Accuracy, precision, recall, F1 plus the two rates at threshold th.

    Values are kept at full precision; round only for presentation.
    """
    if c.positives == 0 or c.negatives == 0:
        raise DegenerateClass(
            f"metrics need both classes populated (P={c.positives}, N={c.negatives})"
        )
    fpr, tpr = rates(c)
    accuracy = (c.tp + c.tn) / c.total
    recall = c.tp / c.positives
    predicted_pos = c.tp + c.fp
    degenerate = predicted_pos == 0
    if degenerate:
        precision = 0.0
        f1 = 0.0
    else:
        precision = c.tp / predicted_pos
        f1 = (
            0.0
            if c.tp == 0
            else 2.0 * precision * recall / (precision + recall)
        )
    return MetricsBundle(
        threshold=th,
        accuracy=accuracy,
        precision=precision,
        recall=recall,
        f1=f1,
        fpr=fpr,
        tpr=tpr,
        degenerate=degenerate,
    )


def round4(x: float) -> float:
    """Presentation rounding used in the result tables."""
    return float(f"{x:.4f}")


def metrics_csv(entries) -> str:
    """CSV over (ConfusionCounts, MetricsBundle) pairs, full float precision."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(
        ["threshold", "tp", "fp", "tn", "fn", "accuracy", "precision",
         "recall", "f1", "fpr", "tpr"]
    )
    for counts, bundle in entries:
        writer.writerow(
            [repr(bundle.threshold), counts.tp, counts.fp, counts.tn, counts.fn]
            + [repr(v) for v in (bundle.accuracy, bundle.precision, bundle.recall,
                                 bundle.f1, bundle.fpr, bundle.tpr)]
        )
    return out.getvalue()
