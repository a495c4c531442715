"""Deterministic SVG rendering of ROC and density plots.

SVG is written by hand with fixed two-decimal coordinate formatting and no
timestamps, so identical inputs give byte-identical documents and golden
tests can compare whole files.  The canvas geometry is part of the contract:
640x480 viewBox, plot area between (60, 20) and (620, 430).
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import DensityCurve
from .errors import ArgumentOutOfRange
from .roc import RocCurve, point_at

WIDTH = 640
HEIGHT = 480
MARGIN_LEFT = 60
MARGIN_TOP = 20
MARGIN_RIGHT = 20
MARGIN_BOTTOM = 50
PLOT_W = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
PLOT_H = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

CURVE_COLOR = "#1f77b4"
CLASS0_COLOR = "#2ca02c"
CLASS1_COLOR = "#d62728"
DIAGONAL_COLOR = "#999999"


@dataclass(frozen=True)
class Marker:
    """A threshold annotation; drawn dashed unless told otherwise."""

    value: float
    label: str
    color: str = "#000000"
    dashed: bool = True


def _f(v: float) -> str:
    return format(v, ".2f")


class _Canvas:
    """Collects SVG elements over a fixed data-to-pixel transform."""

    def __init__(self, x_range, y_range, x_label, y_label, title):
        self.x_min, self.x_max = x_range
        self.y_min, self.y_max = y_range
        if self.x_max <= self.x_min or self.y_max <= self.y_min:
            raise ArgumentOutOfRange("plot ranges must be non-empty")
        self.parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
            f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
            f'<text x="{WIDTH // 2}" y="14" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{title}</text>',
        ]
        self._frame(x_label, y_label)

    def px(self, x: float) -> float:
        return MARGIN_LEFT + (x - self.x_min) / (self.x_max - self.x_min) * PLOT_W

    def py(self, y: float) -> float:
        return MARGIN_TOP + (self.y_max - y) / (self.y_max - self.y_min) * PLOT_H

    def _frame(self, x_label, y_label):
        x0, y0 = MARGIN_LEFT, MARGIN_TOP
        x1, y1 = MARGIN_LEFT + PLOT_W, MARGIN_TOP + PLOT_H
        self.parts.append(
            f'<rect x="{x0}" y="{y0}" width="{PLOT_W}" height="{PLOT_H}" '
            f'fill="none" stroke="#000000"/>'
        )
        for i in range(6):
            fx = self.x_min + (self.x_max - self.x_min) * i / 5
            fy = self.y_min + (self.y_max - self.y_min) * i / 5
            tx = self.px(fx)
            ty = self.py(fy)
            self.parts.append(
                f'<line x1="{_f(tx)}" y1="{y1}" x2="{_f(tx)}" y2="{y1 + 5}" '
                f'stroke="#000000"/>'
            )
            self.parts.append(
                f'<text x="{_f(tx)}" y="{y1 + 18}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="11">{_f(fx)}</text>'
            )
            self.parts.append(
                f'<line x1="{x0 - 5}" y1="{_f(ty)}" x2="{x0}" y2="{_f(ty)}" '
                f'stroke="#000000"/>'
            )
            self.parts.append(
                f'<text x="{x0 - 8}" y="{_f(ty + 4)}" text-anchor="end" '
                f'font-family="sans-serif" font-size="11">{_f(fy)}</text>'
            )
        self.parts.append(
            f'<text x="{MARGIN_LEFT + PLOT_W / 2:.0f}" y="{HEIGHT - 8}" '
            f'text-anchor="middle" font-family="sans-serif" font-size="12">'
            f"{x_label}</text>"
        )
        self.parts.append(
            f'<text x="14" y="{MARGIN_TOP + PLOT_H / 2:.0f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="12" '
            f'transform="rotate(-90 14 {MARGIN_TOP + PLOT_H / 2:.0f})">{y_label}</text>'
        )

    def polyline(self, xs, ys, color, dashed=False):
        pts = " ".join(f"{_f(self.px(x))},{_f(self.py(y))}" for x, y in zip(xs, ys))
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"{dash}/>'
        )

    def vline(self, x, color, dashed=True, label=""):
        tx = _f(self.px(x))
        dash = ' stroke-dasharray="6 4"' if dashed else ""
        self.parts.append(
            f'<line x1="{tx}" y1="{MARGIN_TOP}" x2="{tx}" '
            f'y2="{MARGIN_TOP + PLOT_H}" stroke="{color}"{dash}/>'
        )
        if label:
            self.parts.append(
                f'<text x="{tx}" y="{MARGIN_TOP + 12}" text-anchor="start" '
                f'font-family="sans-serif" font-size="10" fill="{color}" '
                f'transform="rotate(90 {tx} {MARGIN_TOP + 12})">{label}</text>'
            )

    def dot(self, x, y, color, label=""):
        cx, cy = _f(self.px(x)), _f(self.py(y))
        self.parts.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="{color}"/>')
        if label:
            self.parts.append(
                f'<text x="{_f(self.px(x) + 7)}" y="{cy}" font-family="sans-serif" '
                f'font-size="10" fill="{color}">{label}</text>'
            )

    def legend(self, entries):
        y = MARGIN_TOP + 14
        for color, text in entries:
            x0 = MARGIN_LEFT + PLOT_W - 150
            self.parts.append(
                f'<line x1="{x0}" y1="{y - 4}" x2="{x0 + 22}" y2="{y - 4}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
            self.parts.append(
                f'<text x="{x0 + 28}" y="{y}" font-family="sans-serif" '
                f'font-size="11">{text}</text>'
            )
            y += 16

    def finish(self) -> str:
        return "\n".join(self.parts) + "\n</svg>\n"


def render_roc_svg(curve: RocCurve, markers=()) -> str:
    """ROC plot: unit square, dashed chance diagonal, dots at marker thresholds."""
    canvas = _Canvas((0.0, 1.0), (0.0, 1.0), "false positive rate",
                     "true positive rate", "ROC")
    canvas.polyline((0.0, 1.0), (0.0, 1.0), DIAGONAL_COLOR, dashed=True)
    xs = [p.fpr for p in curve.points]
    ys = [p.tpr for p in curve.points]
    canvas.polyline(xs, ys, CURVE_COLOR)
    for m in markers:
        p = point_at(curve, m.value)
        canvas.dot(p.fpr, p.tpr, m.color, m.label)
    return canvas.finish()


def render_kde_svg(curves, markers=()) -> str:
    """Density plot: one line per class curve, legend, vertical marker lines."""
    curves = tuple(curves)
    if not curves:
        raise ArgumentOutOfRange("need at least one density curve")
    lo = min(float(c.grid[0]) for c in curves)
    hi = max(float(c.grid[-1]) for c in curves)
    top = max(float(c.values.max()) for c in curves)
    if top <= 0.0:
        top = 1.0
    canvas = _Canvas((lo, hi), (0.0, top * 1.05), "score", "density", "Score densities")
    palette = {"all": CURVE_COLOR, "class0": CLASS0_COLOR, "class1": CLASS1_COLOR}
    legend = []
    for c in curves:
        color = palette.get(c.class_tag, "#555555")
        canvas.polyline(c.grid.tolist(), c.values.tolist(), color)
        legend.append((color, c.class_tag))
    for m in markers:
        canvas.vline(m.value, m.color, dashed=m.dashed, label=m.label)
    canvas.legend(legend)
    return canvas.finish()


def render_svg(obj, markers=()) -> str:
    """Dispatch on plot payload: a RocCurve or an iterable of DensityCurves."""
    if isinstance(obj, RocCurve):
        return render_roc_svg(obj, markers)
    if isinstance(obj, DensityCurve):
        return render_kde_svg((obj,), markers)
    try:
        seq = tuple(obj)
    except TypeError:
        raise ArgumentOutOfRange(f"cannot plot object of type {type(obj).__name__}") from None
    if seq and all(isinstance(c, DensityCurve) for c in seq):
        return render_kde_svg(seq, markers)
    raise ArgumentOutOfRange("render_svg expects a RocCurve or DensityCurves")
