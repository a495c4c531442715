"""
Class-conditional score densities
=================================

Smooth the per-class score histograms with Gaussian kernels, locate the
crossing point of the two curves and render both as an SVG.  The crossing is
a useful sanity check against the ROC-derived ideal threshold: for well
separated classes the two land close together.
"""

from pathlib import Path

import numpy as np

from fakeval import (
    DEFAULT_GRID_INTERVAL,
    Marker,
    PredictionRecord,
    PredictionSet,
    class_kdes,
    class_partition,
    default_grid,
    density_curve,
    kde_intersections,
    pooled_kde,
    render_kde_svg,
)

rng = np.random.default_rng(33)

records = []
for i, s in enumerate(np.clip(rng.normal(0.3, 0.11, 260), 0.0, 1.0)):
    records.append(PredictionRecord(f"r{i:04d}", "demo", "", 0, float(s)))
for i, s in enumerate(np.clip(rng.normal(0.72, 0.1, 240), 0.0, 1.0)):
    records.append(PredictionRecord(f"f{i:04d}", "demo", "", 1, float(s)))
pred_set = PredictionSet(tuple(records), provenance="demo")

f0, f1 = class_kdes(pred_set)
print(f"class 0: n={f0.samples.size}  scott bandwidth h={f0.bandwidth:.5f}")
print(f"class 1: n={f1.samples.size}  scott bandwidth h={f1.bandwidth:.5f}")

scan = kde_intersections(f0, f1, DEFAULT_GRID_INTERVAL)
if scan.found:
    print(f"crossings: {[f'{c:.5f}' for c in scan.crossings]}")
    print(f"nearest to 0.5: {scan.nearest_to(0.5):.5f}")
else:
    print("densities are indistinguishable" if scan.indistinguishable
          else "no crossing inside the grid")

grid = default_grid()
curves = [
    density_curve(pooled_kde(pred_set), grid, "all"),
    density_curve(f0, grid, "class0"),
    density_curve(f1, grid, "class1"),
]
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
markers = [Marker(c, f"x={c:.3f}", "#000000") for c in scan.crossings]
(out / "kde.svg").write_text(render_kde_svg(curves, markers=markers))
print(f"wrote {out / 'kde.svg'}")

# the pooled density is exactly the prior-weighted mixture of the class
# densities when all three share one bandwidth
x0, x1 = class_partition(pred_set)
print(f"priors: pi0={len(x0) / len(pred_set):.4f}  pi1={len(x1) / len(pred_set):.4f}")
