"""Raster image handling for the preprocessing stage.

Images are plain numpy arrays wrapped in :class:`RasterImage`; only binary
PPM (P6, 8-bit) is read and written, which keeps the I/O dependency-free and
byte-reproducible.  The crop/align step clamps a face box to the frame and
resamples it bilinearly to the square network input.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    AlreadyNormalized,
    ArgumentOutOfRange,
    BoxOutsideImage,
    MalformedRow,
    NonPositiveBox,
)

TARGET_SIDE = 299


@dataclass(frozen=True, eq=False)
class RasterImage:
    """An RGB raster: (height, width, 3), dtype uint8 or float64."""

    pixels: np.ndarray

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 3 or px.shape[2] != 3:
            raise ArgumentOutOfRange(f"expected (h, w, 3) pixels, got shape {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ArgumentOutOfRange(f"image must be at least 1x1, got {px.shape}")
        if px.dtype == np.uint8:
            pass
        elif px.dtype == np.float64:
            if px.size and (px.min() < 0.0 or px.max() > 1.0):
                raise ArgumentOutOfRange("float pixels must lie in [0, 1]")
        else:
            raise ArgumentOutOfRange(f"unsupported dtype {px.dtype}")
        px = px.copy()
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def is_normalized(self) -> bool:
        return self.pixels.dtype == np.float64


def read_ppm(data: bytes) -> RasterImage:
    """Decode a binary PPM (magic P6, maxval 255)."""
    pos = 0

    def token():
        nonlocal pos
        while pos < len(data):
            b = data[pos : pos + 1]
            if b == b"#":
                while pos < len(data) and data[pos : pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            elif b.isspace():
                pos += 1
            else:
                break
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        if start == pos:
            raise MalformedRow("truncated PPM header")
        return data[start:pos]

    if token() != b"P6":
        raise MalformedRow("not a binary PPM (missing P6 magic)")
    try:
        width = int(token())
        height = int(token())
        maxval = int(token())
    except ValueError:
        raise MalformedRow("non-numeric PPM header field") from None
    if width < 1 or height < 1:
        raise MalformedRow(f"bad PPM dimensions {width}x{height}")
    if maxval != 255:
        raise MalformedRow(f"only maxval 255 is supported, got {maxval}")
    pos += 1  # single whitespace byte after maxval
    need = width * height * 3
    raw = data[pos : pos + need]
    if len(raw) < need:
        raise MalformedRow(f"PPM payload truncated: need {need} bytes, got {len(raw)}")
    px = np.frombuffer(raw, dtype=np.uint8).reshape(height, width, 3)
    return RasterImage(px)


def write_ppm(image: RasterImage) -> bytes:
    if image.is_normalized:
        raise ArgumentOutOfRange("PPM output needs 8-bit pixels; got normalized floats")
    header = f"P6\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.pixels.tobytes()


def load_ppm(path) -> RasterImage:
    return read_ppm(Path(path).read_bytes())


def save_ppm(image: RasterImage, path) -> None:
    Path(path).write_bytes(write_ppm(image))


def _resample_bilinear(px: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Corner-aligned bilinear resample of an (h, w, 3) array.

    Output pixel j maps to source coordinate j*(src-1)/(out-1), so the first
    and last samples coincide with the source corners exactly.
    """
    src_h, src_w = px.shape[:2]
    y = np.arange(out_h, dtype=np.float64) * ((src_h - 1) / (out_h - 1) if out_h > 1 else 0.0)
    x = np.arange(out_w, dtype=np.float64) * ((src_w - 1) / (out_w - 1) if out_w > 1 else 0.0)
    y0 = np.floor(y).astype(np.intp)
    x0 = np.floor(x).astype(np.intp)
    y1 = np.minimum(y0 + 1, src_h - 1)
    x1 = np.minimum(x0 + 1, src_w - 1)
    wy = (y - y0)[:, None, None]
    wx = (x - x0)[None, :, None]

    vals = px.astype(np.float64)
    top = vals[y0][:, x0] * (1.0 - wx) + vals[y0][:, x1] * wx
    bottom = vals[y1][:, x0] * (1.0 - wx) + vals[y1][:, x1] * wx
    out = top * (1.0 - wy) + bottom * wy
    if px.dtype == np.uint8:
        return np.clip(np.rint(out), 0, 255).astype(np.uint8)
    return out


def crop_align(image: RasterImage, bbox, target: int = TARGET_SIDE) -> RasterImage:
    """Crop a (x, y, w, h) face box, clamp it to the frame, resize to target.

    The box may extend past the frame; only the in-frame part is kept.  A box
    with no in-frame area raises BoxOutsideImage.
    """
    if target < 1:
        raise ArgumentOutOfRange(f"target side must be >= 1, got {target}")
    x, y, w, h = (int(v) for v in bbox)
    if w <= 0 or h <= 0:
        raise NonPositiveBox(f"box width/height must be positive, got {w}x{h}")
    x0 = max(x, 0)
    y0 = max(y, 0)
    x1 = min(x + w, image.width)
    y1 = min(y + h, image.height)
    if x0 >= x1 or y0 >= y1:
        raise BoxOutsideImage(
            f"box ({x}, {y}, {w}, {h}) lies outside a {image.width}x{image.height} frame"
        )
    window = image.pixels[y0:y1, x0:x1]
    if window.shape[0] == target and window.shape[1] == target:
        return RasterImage(window)
    return RasterImage(_resample_bilinear(window, target, target))


def normalize(image: RasterImage) -> RasterImage:
    """Map 8-bit pixels to float64 in [0, 1] by dividing by 255."""
    if image.is_normalized:
        raise AlreadyNormalized("image pixels are already floats in [0, 1]")
    return RasterImage(image.pixels.astype(np.float64) / 255.0)
