"""
Frame sampling and face-box preprocessing
=========================================

First half: thin a video's frame stream down to one frame per second.
Second half: cut a detector box out of a synthetic portrait, letting the
crop clamp to the frame edge, and resample it to the network input size.
"""

from pathlib import Path

import numpy as np

from fakeval import (
    RasterImage,
    SampleManifestRow,
    TARGET_SIDE,
    crop_align,
    normalize,
    save_ppm,
    select_frames,
)

# --- one frame per second -------------------------------------------------

stamps = [0, 180, 370, 990, 1001, 1430, 2005, 2960, 3001, 3999, 4000]
rows = tuple(
    SampleManifestRow(f"clip_f{i:02d}", "demo", 1, "clip", ts)
    for i, ts in enumerate(stamps)
)
kept = select_frames(rows)
print("timestamps ms:", stamps)
print("kept:         ", [r.timestamp_ms for r in kept])

# --- crop, clamp, resample ------------------------------------------------

rng = np.random.default_rng(11)
h, w = 240, 320
pixels = rng.integers(0, 256, size=(h, w, 3)).astype(np.uint8)
# paint a bright square to stand in for the face
pixels[40:140, 60:160] = (210, 180, 150)
frame = RasterImage(pixels)

# detector box hangs over the top-left corner; crop_align clamps it
face = crop_align(frame, bbox=(-20, -10, 180, 180), target=TARGET_SIDE)
print(f"frame {frame.width}x{frame.height} -> crop {face.width}x{face.height}")

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
save_ppm(face, out / "face_crop.ppm")
print(f"wrote {out / 'face_crop.ppm'}")

net_input = normalize(face)
print(f"normalized: dtype {net_input.pixels.dtype}, "
      f"range [{net_input.pixels.min():.3f}, {net_input.pixels.max():.3f}]")
