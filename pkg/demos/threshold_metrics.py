"""
Thresholded metrics on a scored test set
========================================

Sweep a handful of decision thresholds over synthetic scores and print the
confusion cells plus the derived metrics for each one.
"""

import numpy as np

from fakeval import PredictionRecord, PredictionSet, confusion, round4, scalar_metrics

rng = np.random.default_rng(7)

# two score populations: authentic portraits low, synthetic portraits high
records = []
for i, s in enumerate(np.clip(rng.normal(0.28, 0.13, 120), 0.0, 1.0)):
    records.append(PredictionRecord(f"real_{i:04d}", "demo", f"vid{i % 17}", 0, float(s)))
for i, s in enumerate(np.clip(rng.normal(0.74, 0.12, 140), 0.0, 1.0)):
    records.append(PredictionRecord(f"fake_{i:04d}", "demo", f"gen{i % 23}", 1, float(s)))
pred_set = PredictionSet(tuple(records), provenance="demo")

print(f"{len(pred_set)} predictions "
      f"({int((pred_set.labels == 0).sum())} real, {int(pred_set.labels.sum())} fake)")
print()
print("thresh   tp   fp   tn   fn    acc    prec    rec     f1     fpr")
for th in (0.30, 0.45, 0.50, 0.65, 0.80):
    c = confusion(pred_set, th)
    m = scalar_metrics(c, th)
    print(f"{th:5.2f}  {c.tp:4d} {c.fp:4d} {c.tn:4d} {c.fn:4d}"
          f"  {round4(m.accuracy):6.4f} {round4(m.precision):6.4f}"
          f" {round4(m.recall):6.4f} {round4(m.f1):6.4f} {round4(m.fpr):6.4f}")

# the cells always partition the test set, whatever the threshold
c = confusion(pred_set, 0.5)
assert c.tp + c.fp + c.tn + c.fn == len(pred_set)
