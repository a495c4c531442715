"""Evaluation toolkit for binary deepfake-portrait classifiers.

The package covers the quantitative pipeline around such a classifier
without ever running one: parsing prediction files, threshold metrics, ROC
analysis with ideal-threshold selection, class-conditional kernel density
estimation with the crossing diagnostic, leakage-safe dataset curation,
image cropping and normalization, a symbolic ResNet-50 parameter audit, and
the training-dynamics primitives (sigmoid, log loss, Adam, early stopping).
"""

from .archaudit import (
    FREEZE_PRESETS,
    REPORTED_TRAINABLE,
    ArchitectureSpec,
    FreezeConfig,
    LayerSpec,
    ParamCount,
    audit_report,
    build_spec,
    param_count,
    reported_delta,
)
from .curation import (
    DEFAULT_RATIOS,
    PurgeEntry,
    SampleManifestRow,
    SplitAssignment,
    SplitReport,
    format_split_table,
    initial_split,
    parse_manifest,
    purge_leakage,
    select_frames,
    serialize_manifest,
    split_report,
)
from .density import (
    DEFAULT_GRID_INTERVAL,
    DEFAULT_GRID_N,
    DensityCurve,
    IntersectionScan,
    KdeModel,
    class_kdes,
    default_grid,
    density_curve,
    kde_eval,
    kde_intersections,
    pooled_kde,
    scott_bandwidth,
)
from .errors import FakevalError
from .imageops import (
    TARGET_SIDE,
    RasterImage,
    crop_align,
    load_ppm,
    normalize,
    read_ppm,
    save_ppm,
    write_ppm,
)
from .metrics import (
    ConfusionCounts,
    MetricsBundle,
    apply_threshold,
    confusion,
    rates,
    round4,
    scalar_metrics,
)
from .predictions import (
    PredictionRecord,
    PredictionSet,
    class_partition,
    load_predictions,
    parse_predictions,
    serialize_predictions,
)
from .report import EvaluationReport, evaluate, render_svg, write_report
from .svgplot import Marker, render_kde_svg, render_roc_svg
from .roc import (
    IdealThreshold,
    RocCurve,
    RocPoint,
    auc,
    build_roc,
    corner_distance,
    ideal_threshold,
    point_at,
)
from .traindyn import (
    BATCH_SIZE,
    AdamState,
    EarlyStopState,
    adam_step,
    bce_loss,
    early_stop_update,
    run_early_stopping,
    sigmoid,
)

__version__ = "0.1.0"

__all__ = [
    "FakevalError",
    "PredictionRecord",
    "PredictionSet",
    "parse_predictions",
    "serialize_predictions",
    "load_predictions",
    "class_partition",
    "ConfusionCounts",
    "MetricsBundle",
    "apply_threshold",
    "confusion",
    "rates",
    "scalar_metrics",
    "round4",
    "RocPoint",
    "RocCurve",
    "IdealThreshold",
    "build_roc",
    "auc",
    "ideal_threshold",
    "corner_distance",
    "point_at",
    "KdeModel",
    "DensityCurve",
    "IntersectionScan",
    "scott_bandwidth",
    "kde_eval",
    "density_curve",
    "default_grid",
    "class_kdes",
    "pooled_kde",
    "kde_intersections",
    "DEFAULT_GRID_INTERVAL",
    "DEFAULT_GRID_N",
    "SampleManifestRow",
    "SplitAssignment",
    "PurgeEntry",
    "SplitReport",
    "DEFAULT_RATIOS",
    "parse_manifest",
    "serialize_manifest",
    "select_frames",
    "initial_split",
    "purge_leakage",
    "split_report",
    "format_split_table",
    "RasterImage",
    "read_ppm",
    "write_ppm",
    "load_ppm",
    "save_ppm",
    "crop_align",
    "normalize",
    "LayerSpec",
    "ArchitectureSpec",
    "FreezeConfig",
    "ParamCount",
    "FREEZE_PRESETS",
    "REPORTED_TRAINABLE",
    "build_spec",
    "param_count",
    "audit_report",
    "reported_delta",
    "AdamState",
    "EarlyStopState",
    "BATCH_SIZE",
    "sigmoid",
    "bce_loss",
    "adam_step",
    "early_stop_update",
    "run_early_stopping",
    "EvaluationReport",
    "evaluate",
    "write_report",
    "render_svg",
    "Marker",
    "render_roc_svg",
    "render_kde_svg",
    "TARGET_SIDE",
    "__version__",
]
