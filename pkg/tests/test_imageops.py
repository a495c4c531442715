import numpy as np
import pytest

from fakeval import (
    RasterImage,
    crop_align,
    load_ppm,
    normalize,
    read_ppm,
    save_ppm,
    write_ppm,
)
from fakeval.errors import (
    AlreadyNormalized,
    ArgumentOutOfRange,
    BoxOutsideImage,
    MalformedRow,
    NonPositiveBox,
)


def checker(h, w):
    px = np.zeros((h, w, 3), dtype=np.uint8)
    px[::2, ::2] = 255
    px[1::2, 1::2] = 128
    return RasterImage(px)


def test_ppm_roundtrip():
    img = checker(13, 17)
    data = write_ppm(img)
    assert data.startswith(b"P6\n17 13\n255\n")
    back = read_ppm(data)
    assert np.array_equal(back.pixels, img.pixels)


def test_ppm_file_roundtrip(tmp_path):
    img = checker(8, 9)
    path = tmp_path / "x.ppm"
    save_ppm(img, path)
    assert np.array_equal(load_ppm(path).pixels, img.pixels)


def test_ppm_header_comments_and_whitespace():
    payload = bytes(range(2 * 2 * 3))
    data = b"P6 # comment\n# another comment\n 2\t2 \n255\n" + payload
    img = read_ppm(data)
    assert img.width == 2 and img.height == 2
    assert img.pixels[0, 0, 0] == 0


def test_ppm_rejects_bad_input():
    with pytest.raises(MalformedRow):
        read_ppm(b"P5\n2 2\n255\n" + bytes(12))
    with pytest.raises(MalformedRow):
        read_ppm(b"P6\n2 2\n65535\n" + bytes(24))
    with pytest.raises(MalformedRow):
        read_ppm(b"P6\n2 2\n255\n" + bytes(5))  # truncated payload
    with pytest.raises(MalformedRow):
        read_ppm(b"P6\n2")


def test_raster_image_validation():
    with pytest.raises(ArgumentOutOfRange):
        RasterImage(np.zeros((4, 4), dtype=np.uint8))
    with pytest.raises(ArgumentOutOfRange):
        RasterImage(np.zeros((4, 4, 3), dtype=np.int32))
    with pytest.raises(ArgumentOutOfRange):
        RasterImage(np.full((2, 2, 3), 1.5))


def test_crop_rejects_bad_boxes():
    img = checker(40, 40)
    with pytest.raises(NonPositiveBox):
        crop_align(img, (0, 0, 0, 10))
    with pytest.raises(NonPositiveBox):
        crop_align(img, (0, 0, 10, -1))
    with pytest.raises(BoxOutsideImage):
        crop_align(img, (40, 0, 10, 10))
    with pytest.raises(BoxOutsideImage):
        crop_align(img, (-20, -20, 10, 10))


def test_crop_clamps_overhanging_box():
    """(-10,-10,320,320) on a 400x400 frame clamps to the (0,0,310,310) window."""
    rng = np.random.default_rng(51)
    px = rng.integers(0, 256, size=(400, 400, 3), dtype=np.uint8)
    img = RasterImage(px)
    out = crop_align(img, (-10, -10, 320, 320), target=299)
    assert out.height == 299 and out.width == 299
    direct = crop_align(img, (0, 0, 310, 310), target=299)
    assert np.array_equal(out.pixels, direct.pixels)


def test_crop_exact_window_is_copied():
    rng = np.random.default_rng(52)
    px = rng.integers(0, 256, size=(64, 64, 3), dtype=np.uint8)
    img = RasterImage(px)
    out = crop_align(img, (5, 7, 20, 20), target=20)
    assert np.array_equal(out.pixels, px[7:27, 5:25])


def test_bilinear_corner_alignment():
    # 2x2 -> 3x3: corners exact, edges/center are the bilinear means
    base = np.array(
        [[[0, 0, 0], [100, 100, 100]], [[200, 200, 200], [40, 40, 40]]],
        dtype=np.uint8,
    )
    out = crop_align(RasterImage(base), (0, 0, 2, 2), target=3)
    chan = out.pixels[:, :, 0]
    assert chan.tolist() == [[0, 50, 100], [100, 85, 70], [200, 120, 40]]


def test_upscale_preserves_constant_image():
    img = RasterImage(np.full((5, 5, 3), 77, dtype=np.uint8))
    out = crop_align(img, (0, 0, 5, 5), target=299)
    assert int(out.pixels.min()) == 77 and int(out.pixels.max()) == 77


def test_downscale_stays_in_range():
    rng = np.random.default_rng(53)
    px = rng.integers(0, 256, size=(123, 77, 3), dtype=np.uint8)
    out = crop_align(RasterImage(px), (0, 0, 77, 123), target=32)
    assert out.pixels.dtype == np.uint8
    assert out.pixels.shape == (32, 32, 3)


def test_normalize_and_double_normalize():
    img = checker(4, 4)
    norm = normalize(img)
    assert norm.pixels.dtype == np.float64
    assert float(norm.pixels.max()) == 1.0
    assert float(norm.pixels.min()) == 0.0
    np.testing.assert_allclose(norm.pixels, img.pixels.astype(np.float64) / 255.0)
    with pytest.raises(AlreadyNormalized):
        normalize(norm)


def test_write_ppm_rejects_normalized():
    norm = normalize(checker(2, 2))
    with pytest.raises(ArgumentOutOfRange):
        write_ppm(norm)


def test_pixels_are_read_only():
    img = checker(3, 3)
    with pytest.raises(ValueError):
        img.pixels[0, 0, 0] = 7
