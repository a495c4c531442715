"""Evaluation report: one PredictionSet in, the full artifact bundle out.

`evaluate` composes the ROC sweep, the threshold metrics at the ideal
threshold and at +/-0.1 around it, the class-conditional densities, and the
density-intersection diagnostic into a single immutable report.
`write_report` serializes that report as metrics.csv, roc.csv, kde.csv,
roc.svg, kde.svg and a flat report.json; identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .density import (
    DEFAULT_GRID_INTERVAL,
    DEFAULT_GRID_N,
    IntersectionScan,
    class_kdes,
    default_grid,
    density_curve,
    kde_csv,
    kde_intersections,
    pooled_kde,
)
from .metrics import ConfusionCounts, MetricsBundle, confusion, metrics_csv, scalar_metrics
from .predictions import PredictionSet, load_predictions
from .roc import IdealThreshold, build_roc, ideal_threshold, roc_csv
from .svgplot import Marker, render_kde_svg, render_roc_svg, render_svg

__all__ = ["EvaluationReport", "evaluate", "write_report", "report_json", "render_svg"]

THRESHOLD_OFFSETS = (-0.1, 0.0, 0.1)
DEFAULT_THRESHOLD = 0.5

IDEAL_COLOR = "#000000"
OFFSET_COLOR = "#888888"
DEFAULT_TH_COLOR = "#ff7f0e"


@dataclass(frozen=True)
class EvaluationReport:
    """Everything derivable from one prediction set, precomputed."""

    ideal: IdealThreshold
    auc: float
    thresholds: tuple[float, float, float]  # ideal-0.1, ideal, ideal+0.1 (clamped)
    clamped: tuple[bool, bool, bool]
    confusions: tuple[ConfusionCounts, ConfusionCounts, ConfusionCounts]
    bundles: tuple[MetricsBundle, MetricsBundle, MetricsBundle]
    intersections: IntersectionScan
    intersection_delta: float | None

    @property
    def ideal_threshold(self) -> float:
        return self.ideal.threshold

    @property
    def confusion(self) -> ConfusionCounts:
        """Cells at the ideal threshold."""
        return self.confusions[1]


def _clamp01(x: float) -> tuple[float, bool]:
    if x < 0.0:
        return 0.0, True
    if x > 1.0:
        return 1.0, True
    return x, False


def evaluate(pred_set: PredictionSet) -> EvaluationReport:
    """Run the full analysis; both classes must be present."""
    curve = build_roc(pred_set)
    ideal = ideal_threshold(curve)

    thresholds = []
    clamped = []
    for off in THRESHOLD_OFFSETS:
        th, was_clamped = _clamp01(ideal.threshold + off)
        thresholds.append(th)
        clamped.append(was_clamped)
    confusions = tuple(confusion(pred_set, th) for th in thresholds)
    bundles = tuple(scalar_metrics(c, th) for c, th in zip(confusions, thresholds))

    kde0, kde1 = class_kdes(pred_set)
    scan = kde_intersections(kde0, kde1, DEFAULT_GRID_INTERVAL)
    if scan.found:
        delta = abs(scan.nearest_to(ideal.threshold) - ideal.threshold)
    else:
        delta = None

    return EvaluationReport(
        ideal=ideal,
        auc=curve.auc,
        thresholds=tuple(thresholds),
        clamped=tuple(clamped),
        confusions=confusions,
        bundles=bundles,
        intersections=scan,
        intersection_delta=delta,
    )


def report_json(report: EvaluationReport, pred_set: PredictionSet) -> str:
    """Flat key-value summary, keys sorted, two-space indent."""
    c = report.confusion
    mid = report.bundles[1]
    payload = {
        "provenance": pred_set.provenance,
        "n_records": len(pred_set.records),
        "n_real": int((pred_set.labels == 0).sum()),
        "n_fake": int((pred_set.labels == 1).sum()),
        "auc": report.auc,
        "ideal_threshold": report.ideal.threshold,
        "ideal_fpr": report.ideal.point.fpr,
        "ideal_tpr": report.ideal.point.tpr,
        "corner_distance": report.ideal.distance,
        "roc_degenerate": report.ideal.degenerate,
        "threshold_low": report.thresholds[0],
        "threshold_high": report.thresholds[2],
        "threshold_low_clamped": report.clamped[0],
        "threshold_high_clamped": report.clamped[2],
        "tp": c.tp,
        "fp": c.fp,
        "tn": c.tn,
        "fn": c.fn,
        "accuracy": mid.accuracy,
        "precision": mid.precision,
        "recall": mid.recall,
        "f1": mid.f1,
        "fpr": mid.fpr,
        "tpr": mid.tpr,
        "crossing_count": len(report.intersections.crossings),
        "nearest_crossing": (
            report.intersections.nearest_to(report.ideal.threshold)
            if report.intersections.found
            else None
        ),
        "intersection_delta": report.intersection_delta,
        "densities_indistinguishable": report.intersections.indistinguishable,
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _threshold_markers(report: EvaluationReport) -> list[Marker]:
    low, ideal, high = report.thresholds
    return [
        Marker(ideal, f"ideal {ideal:.4f}", IDEAL_COLOR, dashed=True),
        Marker(low, f"{low:.4f}", OFFSET_COLOR, dashed=True),
        Marker(high, f"{high:.4f}", OFFSET_COLOR, dashed=True),
        Marker(DEFAULT_THRESHOLD, "default 0.5", DEFAULT_TH_COLOR, dashed=False),
    ]


def write_report(pred_set: PredictionSet, out_dir) -> dict[str, Path]:
    """Write the six artifact files; returns {artifact name: path}."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = evaluate(pred_set)
    curve = build_roc(pred_set)

    kde0, kde1 = class_kdes(pred_set)
    kde_all = pooled_kde(pred_set)
    grid = default_grid(DEFAULT_GRID_INTERVAL, DEFAULT_GRID_N)
    curve_all = density_curve(kde_all, grid, "all")
    curve0 = density_curve(kde0, grid, "class0")
    curve1 = density_curve(kde1, grid, "class1")

    markers = _threshold_markers(report)
    artifacts = {
        "metrics.csv": metrics_csv(zip(report.confusions, report.bundles)),
        "roc.csv": roc_csv(curve),
        "kde.csv": kde_csv(curve_all, curve0, curve1),
        "roc.svg": render_roc_svg(curve, markers),
        "kde.svg": render_kde_svg((curve_all, curve0, curve1), markers),
        "report.json": report_json(report, pred_set),
    }
    paths = {}
    for name, text in artifacts.items():
        path = out / name
        path.write_bytes(text.encode("utf-8"))
        paths[name] = path
    return paths


def evaluate_file(path, out_dir) -> dict[str, Path]:
    """Convenience: load a predictions CSV and write its report directory."""
    pred_set = load_predictions(path)
    return write_report(pred_set, out_dir)
