"""Contrast operators on gray images.

The relative contrast between two distinct pixels is the logarithmic
difference of their values scaled down by the Euclidean pixel distance:
rel = (1/d) <x> (f(p1) <-> f(p2)).  Absolute contrast is its magnitude,
and the contrast at a pixel is the logarithmic mean of the absolute
contrasts to its 4- or 8-neighbors.

These are composite expressions, so they are evaluated as single
kernels in the unbounded domain (lift through phi, combine, map back
once).  Evaluating them as chains of two-argument operations would
round through the bounded value grid at every step, which near the
interval ends costs far more than the one mapping; the single-kernel
form keeps the pixel mean within 1e-12 of a high-precision evaluation.
The per-neighbor absolute contrasts are still materialized as gray
values (exactly what ``abs_contrast`` returns) before the mean lifts
them back, so the scalar and whole-image paths agree bit for bit.
"""

from __future__ import annotations

import math

import numpy as np

from . import gray
from .errors import DimensionTooSmallError, KindMismatchError, SamePixelError
from .image import Image

__all__ = [
    "CONNECTIVITIES",
    "MODES",
    "rel_contrast",
    "abs_contrast",
    "pixel_contrast",
    "contrast_map",
]

CONNECTIVITIES = (4, 8)
MODES = ("horizontal", "vertical", "pixel")

# Neighbor visit order: axis neighbors first, then diagonals.  The
# pixel mean sums phi terms in this order; the whole-image path must
# accumulate its planes in the same order to stay bit-identical.
_OFFSETS = (
    (0, 1),
    (0, -1),
    (1, 0),
    (-1, 0),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
)


def _require_gray(f):
    if f.kind != "gray":
        raise KindMismatchError("contrast is defined on gray images; reduce color inputs first")


def _check_coord(f, p, label):
    x, y = p
    x, y = int(x), int(y)
    if not (0 <= x < f.width and 0 <= y < f.height):
        raise IndexError(f"{label}=({x}, {y}) outside {f.width}x{f.height} image")
    return x, y


def _check_connectivity(connectivity):
    if connectivity not in CONNECTIVITIES:
        raise ValueError(f"connectivity must be 4 or 8, got {connectivity!r}")
    return _OFFSETS[:4] if connectivity == 4 else _OFFSETS


def _rel_kernel(phi1, phi2, dist):
    return gray.phi_inv((phi1 - phi2) / dist)


def rel_contrast(f, p1, p2):
    """Signed contrast between two distinct pixels of a gray image.

    Computed as phi_inv((phi(f(p1)) - phi(f(p2))) / d) with d the
    Euclidean distance between the coordinates, so swapping the pixels
    negates the result exactly.
    """
    _require_gray(f)
    x1, y1 = _check_coord(f, p1, "p1")
    x2, y2 = _check_coord(f, p2, "p2")
    if x1 == x2 and y1 == y2:
        raise SamePixelError(f"contrast at zero distance is undefined (p=({x1}, {y1}))")
    d = math.hypot(x2 - x1, y2 - y1)
    v1 = f.data[y1, x1]
    v2 = f.data[y2, x2]
    return float(_rel_kernel(gray.phi(v1), gray.phi(v2), d))


def abs_contrast(f, p1, p2):
    """Magnitude of the relative contrast; symmetric in its pixels."""
    return abs(rel_contrast(f, p1, p2))


def pixel_contrast(f, p, connectivity=4):
    """Logarithmic mean of absolute contrasts to the in-image neighbors.

    Neighbors outside the image are dropped and the mean divides by the
    count that remains.  The result sits between the smallest and
    largest neighbor contrast and is 0 exactly when all neighbors equal
    the center value.
    """
    _require_gray(f)
    offsets = _check_connectivity(connectivity)
    x, y = _check_coord(f, p, "p")
    total = 0.0
    count = 0
    for dx, dy in offsets:
        nx, ny = x + dx, y + dy
        if 0 <= nx < f.width and 0 <= ny < f.height:
            total = total + float(gray.phi(abs_contrast(f, (x, y), (nx, ny))))
            count += 1
    if count == 0:
        raise DimensionTooSmallError("pixel contrast needs at least one neighbor")
    return float(gray.phi_inv(total / count))


def _directional_plane(data, mode):
    height, width = data.shape
    phi = gray.phi(data)
    out = np.zeros((height, width))
    if mode == "horizontal":
        if width < 2:
            raise DimensionTooSmallError("horizontal contrast needs width >= 2")
        # out(i, j) compares the pixel on the right against this one;
        # the last column has no right neighbor and stays 0.
        out[:, :-1] = _rel_kernel(phi[:, 1:], phi[:, :-1], 1.0)
    else:
        if height < 2:
            raise DimensionTooSmallError("vertical contrast needs height >= 2")
        # out(i, j) compares this pixel against the one below; the last
        # row stays 0.
        out[:-1, :] = _rel_kernel(phi[:-1, :], phi[1:, :], 1.0)
    return out


def _pixel_plane(data, offsets):
    height, width = data.shape
    if height * width < 2:
        raise DimensionTooSmallError("pixel contrast needs at least two pixels")
    phi = gray.phi(data)
    total = np.zeros((height, width))
    count = np.zeros((height, width))
    for dx, dy in offsets:
        xs = slice(max(0, -dx), width - max(0, dx))
        ys = slice(max(0, -dy), height - max(0, dy))
        nxs = slice(max(0, dx), width - max(0, -dx))
        nys = slice(max(0, dy), height - max(0, -dy))
        d = math.hypot(dx, dy)
        rel = _rel_kernel(phi[ys, xs], phi[nys, nxs], d)
        total[ys, xs] += gray.phi(np.abs(rel))
        count[ys, xs] += 1.0
    return gray.phi_inv(total / count)


def contrast_map(f, mode, connectivity=4):
    """Whole-image contrast in one of three modes.

    ``horizontal`` and ``vertical`` emit signed neighbor contrasts with
    the trailing column/row zero-filled; ``pixel`` emits the neighbor
    mean at every pixel.  Each output pixel equals the corresponding
    scalar operator bit for bit.  A color input is reduced per channel
    and the channel maps combine by pointwise maximum of magnitudes.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    offsets = _check_connectivity(connectivity)
    if f.kind == "color":
        channels = [
            contrast_map(Image._wrap(f.data[:, :, c].copy()), mode, connectivity)
            for c in range(3)
        ]
        stacked = np.stack([ch.data for ch in channels])
        return Image._wrap(np.max(np.abs(stacked), axis=0))
    if mode == "pixel":
        return Image._wrap(_pixel_plane(f.data, offsets))
    return Image._wrap(_directional_plane(f.data, mode))
