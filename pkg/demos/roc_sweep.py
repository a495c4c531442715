"""
ROC curve, AUC and the ideal threshold
======================================
"""

from pathlib import Path

import numpy as np

from fakeval import (
    Marker,
    PredictionRecord,
    PredictionSet,
    build_roc,
    ideal_threshold,
    point_at,
    render_roc_svg,
)

rng = np.random.default_rng(21)

records = []
for i, s in enumerate(np.clip(rng.normal(0.35, 0.15, 200), 0.0, 1.0)):
    records.append(PredictionRecord(f"r{i:04d}", "demo", "", 0, float(s)))
for i, s in enumerate(np.clip(rng.normal(0.68, 0.15, 200), 0.0, 1.0)):
    records.append(PredictionRecord(f"f{i:04d}", "demo", "", 1, float(s)))
pred_set = PredictionSet(tuple(records), provenance="demo")

curve = build_roc(pred_set)
print(f"sweep thresholds: {len(curve.points)}")
print(f"AUC = {curve.auc:.6f}")

# the ideal threshold minimizes the distance to the perfect-classifier corner
it = ideal_threshold(curve)
print(f"ideal threshold = {it.threshold:.6f} "
      f"(fpr {it.point.fpr:.4f}, tpr {it.point.tpr:.4f}, "
      f"corner distance {it.distance:.4f})")

# the operating point at any requested threshold snaps to the sweep
for th in (0.25, 0.5, 0.75):
    p = point_at(curve, th)
    print(f"  at {th:.2f}: fpr {p.fpr:.4f}  tpr {p.tpr:.4f}")

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
svg = render_roc_svg(curve, markers=[Marker(it.threshold, "ideal", "#000000")])
(out / "roc.svg").write_text(svg)
print(f"wrote {out / 'roc.svg'}")
