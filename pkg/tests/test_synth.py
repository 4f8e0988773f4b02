"""Synthetic raster generators: shapes, determinism, code ranges."""

import numpy as np

from logimg.synth import (
    checkerboard,
    color_cast,
    color_gradient,
    gray_gradient,
    gray_step,
    vignette,
)


def test_shapes_and_channels():
    assert gray_gradient(7, 5).pixels.shape == (5, 7)
    assert gray_step(6, 4).pixels.shape == (4, 6)
    assert checkerboard(8, 8).pixels.shape == (8, 8)
    assert color_gradient(7, 5).pixels.shape == (5, 7, 3)
    assert color_cast(7, 5).pixels.shape == (5, 7, 3)
    assert vignette(7, 5).pixels.shape == (5, 7)


def test_deterministic():
    for make in (gray_gradient, gray_step, checkerboard, color_gradient, color_cast, vignette):
        assert np.array_equal(make(9, 6).pixels, make(9, 6).pixels)


def test_gradient_endpoints_and_axes():
    g = gray_gradient(5, 3)
    assert g.pixels[0, 0] == 0 and g.pixels[0, -1] == 255
    assert np.array_equal(g.pixels[0], g.pixels[1])
    v = gray_gradient(3, 5, axis="y")
    assert v.pixels[0, 0] == 0 and v.pixels[-1, 0] == 255
    assert np.array_equal(v.pixels[:, 0], v.pixels[:, 1])


def test_step_bands():
    s = gray_step(4, 6, low=10, high=200)
    assert np.all(s.pixels[:3] == 10) and np.all(s.pixels[3:] == 200)


def test_checkerboard_alternates():
    c = checkerboard(4, 4, tile=2, low=1, high=254)
    assert c.pixels[0, 0] == 1 and c.pixels[0, 2] == 254
    assert c.pixels[2, 0] == 254 and c.pixels[2, 2] == 1


def test_vignette_bright_center_dark_corners():
    v = vignette(9, 9, low=40, high=230)
    assert v.pixels[4, 4] == 230
    assert v.pixels[0, 0] == 40
    assert v.pixels[0, 0] < v.pixels[2, 2] < v.pixels[4, 4]


def test_color_cast_offsets_channels():
    c = color_cast(5, 2, bias=(40, -10, -25)).pixels.astype(int)
    mid = c[0, 2]
    assert mid[0] > mid[1] > mid[2]
