"""Synthetic 8-bit rasters: gradients, steps, checkers, color casts.

Stand-ins for photographic test material.  Everything is deterministic
and returns a :class:`~logimg.raster.RasterBuffer` ready for
``to_model`` or for writing out as PGM/PPM.
"""

from __future__ import annotations

import numpy as np

from .raster import RasterBuffer

__all__ = [
    "gray_gradient",
    "gray_step",
    "checkerboard",
    "color_gradient",
    "color_cast",
    "vignette",
]


def _ramp(n, lo, hi):
    if n == 1:
        return np.array([lo], dtype=np.float64)
    return lo + (hi - lo) * np.arange(n, dtype=np.float64) / (n - 1)


def gray_gradient(width, height, axis="x", lo=0, hi=255):
    """Linear ramp from ``lo`` to ``hi`` along the given axis."""
    if axis == "x":
        row = _ramp(width, lo, hi)
        data = np.tile(row, (height, 1))
    else:
        col = _ramp(height, lo, hi)
        data = np.tile(col[:, None], (1, width))
    return RasterBuffer(np.round(data).astype(np.uint8))


def gray_step(width, height, low=64, high=192):
    """Two horizontal bands: ``low`` on top, ``high`` below."""
    data = np.full((height, width), low, dtype=np.uint8)
    data[height // 2 :, :] = high
    return RasterBuffer(data)


def checkerboard(width, height, tile=8, low=32, high=224):
    """Alternating tiles of two codes."""
    ys, xs = np.mgrid[0:height, 0:width]
    cells = (ys // tile + xs // tile) % 2
    return RasterBuffer(np.where(cells == 0, low, high).astype(np.uint8))


def color_gradient(width, height):
    """Red ramps left to right, green top to bottom, blue diagonally."""
    r = np.tile(_ramp(width, 0, 255), (height, 1))
    g = np.tile(_ramp(height, 0, 255)[:, None], (1, width))
    b = (r + g) / 2.0
    return RasterBuffer(np.round(np.stack([r, g, b], axis=-1)).astype(np.uint8))


def color_cast(width, height, bias=(40, -10, -25)):
    """A gray gradient pushed off neutral by per-channel code offsets."""
    base = np.tile(_ramp(width, 30, 225), (height, 1))
    channels = [np.clip(base + offset, 0, 255) for offset in bias]
    return RasterBuffer(np.round(np.stack(channels, axis=-1)).astype(np.uint8))


def vignette(width, height, low=40, high=230):
    """Radial falloff, bright center to dark corners."""
    ys, xs = np.mgrid[0:height, 0:width]
    cy, cx = (height - 1) / 2.0, (width - 1) / 2.0
    r = np.hypot(ys - cy, xs - cx)
    r /= max(r.max(), 1.0)
    data = high - (high - low) * r * r
    return RasterBuffer(np.round(data).astype(np.uint8))
