"""Class-conditional Gaussian kernel density estimation.

The estimate at a point x is

    f_hat(x) = 1/(n h) * sum_i phi((x - x_i) / h)

with phi the standard normal density and h the bandwidth.  The default
bandwidth follows Scott's rule, h = sigma_hat * n^(-1/5), with sigma_hat the
sample standard deviation (n-1 denominator).  Because the kernel has infinite
support the density is positive outside [0, 1] even though every sample lies
inside it; evaluation grids therefore extend beyond the score interval by
default.

`kde_intersections` locates the crossings of the two class densities, the
diagnostic that the ideal classification threshold is expected to sit near.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentOutOfRange, DegenerateSamples
from .predictions import PredictionSet, class_partition, require_nonempty

DEFAULT_GRID_INTERVAL = (-0.1, 1.1)
DEFAULT_GRID_N = 512

_SQRT_2PI = math.sqrt(2.0 * math.pi)


def scott_bandwidth(samples) -> float:
    """Scott's rule: sample standard deviation times n^(-1/5).

    Raises DegenerateSamples for fewer than two samples or zero variance.
    """
    x = np.asarray(samples, dtype=np.float64)
    n = x.size
    if n < 2:
        raise DegenerateSamples(f"bandwidth needs at least 2 samples, got {n}")
    sigma = float(np.std(x, ddof=1))
    if sigma <= 0.0:
        raise DegenerateSamples("bandwidth needs positive sample variance")
    return sigma * n ** (-1.0 / 5.0)


@dataclass(frozen=True, eq=False)
class KdeModel:
    """Gaussian KDE over a fixed sample vector with a fixed bandwidth."""

    samples: np.ndarray
    bandwidth: float
    kernel: str = "gaussian"

    def __post_init__(self):
        x = np.asarray(self.samples, dtype=np.float64)
        if x.ndim != 1 or x.size < 1:
            raise DegenerateSamples("KDE needs a non-empty 1-D sample vector")
        x = x.copy()
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)
        if not (self.bandwidth > 0.0):
            raise DegenerateSamples(f"bandwidth must be positive, got {self.bandwidth!r}")
        if self.kernel != "gaussian":
            raise ArgumentOutOfRange(f"unsupported kernel {self.kernel!r}")

    @classmethod
    def from_samples(cls, samples) -> "KdeModel":
        """Build a model with the Scott bandwidth."""
        return cls(samples=np.asarray(samples, dtype=np.float64),
                   bandwidth=scott_bandwidth(samples))


def kde_eval(model: KdeModel, x):
    """Evaluate the density at scalar or array x.

    Finite and non-negative everywhere; far from all samples it underflows
    toward zero.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=np.float64))
    samples = model.samples
    h = model.bandwidth
    n = samples.size
    out = np.empty_like(x_arr)
    # chunk the grid so the (grid, samples) broadcast stays within ~32 MB
    block = max(1, int(4_000_000 // max(n, 1)))
    for start in range(0, x_arr.size, block):
        chunk = x_arr[start:start + block]
        u = (chunk[:, None] - samples[None, :]) / h
        out[start:start + block] = np.exp(-0.5 * u * u).sum(axis=1)
    out /= n * h * _SQRT_2PI
    if np.isscalar(x) or np.asarray(x).ndim == 0:
        return float(out[0])
    return out


@dataclass(frozen=True, eq=False)
class DensityCurve:
    """A KDE sampled on an ascending grid, tagged with the class it describes."""

    grid: np.ndarray
    values: np.ndarray
    class_tag: object  # 0, 1, or "all"

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)
        if grid.ndim != 1 or grid.shape != values.shape:
            raise ArgumentOutOfRange("grid and values must be matching 1-D arrays")
        if np.any(np.diff(grid) <= 0):
            raise ArgumentOutOfRange("grid must be strictly ascending")
        if np.any(values < 0):
            raise ArgumentOutOfRange("density values must be non-negative")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)


def density_curve(model: KdeModel, grid, class_tag) -> DensityCurve:
    grid = np.asarray(grid, dtype=np.float64)
    return DensityCurve(grid=grid, values=kde_eval(model, grid), class_tag=class_tag)


def default_grid(interval=DEFAULT_GRID_INTERVAL, grid_n: int = DEFAULT_GRID_N) -> np.ndarray:
    lo, hi = interval
    return np.linspace(lo, hi, grid_n)


def class_kdes(pred_set: PredictionSet) -> tuple[KdeModel, KdeModel]:
    """One Scott-bandwidth KDE per class, built from the class partition."""
    x0, x1 = class_partition(pred_set)
    try:
        f0 = KdeModel.from_samples(x0)
    except DegenerateSamples as exc:
        raise DegenerateSamples(f"negative class: {exc}") from None
    try:
        f1 = KdeModel.from_samples(x1)
    except DegenerateSamples as exc:
        raise DegenerateSamples(f"positive class: {exc}") from None
    return f0, f1


def pooled_kde(pred_set: PredictionSet) -> KdeModel:
    """Scott-bandwidth KDE over all scores regardless of class."""
    require_nonempty(pred_set)
    return KdeModel.from_samples(pred_set.scores)


@dataclass(frozen=True)
class IntersectionScan:
    """Crossings of two class densities on a scan interval.

    An empty ``crossings`` tuple is a valid outcome, not an error;
    ``indistinguishable`` marks the special case where the two densities are
    identical everywhere on the grid.
    """

    crossings: tuple[float, ...]
    indistinguishable: bool

    @property
    def found(self) -> bool:
        return len(self.crossings) > 0

    def nearest_to(self, x: float):
        """The crossing closest to x, or None when there is none."""
        if not self.crossings:
            return None
        return min(self.crossings, key=lambda c: abs(c - x))


def kde_intersections(
    f0: KdeModel,
    f1: KdeModel,
    interval=DEFAULT_GRID_INTERVAL,
    grid_n: int = DEFAULT_GRID_N,
    tol: float = 1e-9,
) -> IntersectionScan:
    """Locate sign changes of g(x) = f0(x) - f1(x) on [lo, hi].

    The difference is scanned on a uniform grid; each bracketed sign change is
    refined by bisection until the bracket is narrower than ``tol``.  Crossings
    are returned in ascending order.
    """
    lo, hi = interval
    if grid_n < 3:
        raise ArgumentOutOfRange(f"grid_n must be >= 3, got {grid_n}")
    if not lo < hi:
        raise ArgumentOutOfRange(f"need lo < hi, got [{lo}, {hi}]")

    grid = np.linspace(lo, hi, grid_n)
    g = kde_eval(f0, grid) - kde_eval(f1, grid)

    if np.all(g == 0.0):
        return IntersectionScan(crossings=(), indistinguishable=True)

    def g_at(x: float) -> float:
        return kde_eval(f0, x) - kde_eval(f1, x)

    crossings = []
    for i in range(grid_n - 1):
        ga, gb = g[i], g[i + 1]
        if ga == 0.0:
            if not crossings or crossings[-1] != grid[i]:
                crossings.append(float(grid[i]))
            continue
        if ga * gb < 0.0:
            a, b = float(grid[i]), float(grid[i + 1])
            fa = float(ga)
            while b - a > tol:
                mid = 0.5 * (a + b)
                fm = g_at(mid)
                if fm == 0.0:
                    a = b = mid
                    break
                if (fa < 0.0) != (fm < 0.0):
                    b = mid
                else:
                    a, fa = mid, fm
            crossings.append(0.5 * (a + b))
    if g[-1] == 0.0:
        crossings.append(float(grid[-1]))
    return IntersectionScan(crossings=tuple(crossings), indistinguishable=False)


def kde_csv(curve_all: DensityCurve, curve0: DensityCurve, curve1: DensityCurve) -> str:
    """`x,f_all,f0,f1` rows over a shared grid, full float precision."""
    if not (
        np.array_equal(curve_all.grid, curve0.grid)
        and np.array_equal(curve_all.grid, curve1.grid)
    ):
        raise ArgumentOutOfRange("density curves must share one grid")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["x", "f_all", "f0", "f1"])
    for x, fa, f0, f1 in zip(curve_all.grid, curve_all.values,
                             curve0.values, curve1.values):
        writer.writerow([repr(float(x)), repr(float(fa)), repr(float(f0)),
                         repr(float(f1))])
    return out.getvalue()
