"""Gaussian smoothing in log coordinates.

Used to build an illumination estimate that the bounded subtraction can
remove from an image.  The blur runs on the log coordinates (channel by
channel for color images) so the smoothed field maps back into the open
interval without further clamping decisions; the spatial kernel is a
truncated, renormalized Gaussian with radius ceil(3 sigma), applied
separably with edge-replicated borders.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from . import gray
from .image import Image

__all__ = ["gaussian_correction", "gaussian_kernel"]


def gaussian_kernel(sigma):
    """Normalized 1-D Gaussian taps ``exp(-k^2 / (2 sigma^2))``, k in [-r, r]."""
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    radius = math.ceil(3.0 * sigma)
    k = np.arange(-radius, radius + 1, dtype=np.float64)
    weights = np.exp(-(k * k) / (2.0 * sigma * sigma))
    return weights / weights.sum()


def _convolve_axis(field, weights, axis):
    radius = len(weights) // 2
    pad = [(0, 0)] * field.ndim
    pad[axis] = (radius, radius)
    padded = np.pad(field, pad, mode="edge")
    windows = sliding_window_view(padded, len(weights), axis=axis)
    return windows @ weights


def gaussian_correction(f, sigma):
    """Gaussian-smoothed copy of ``f``, smoothing done on log coordinates.

    The result is a valid image of the same shape and kind, suitable as
    the illumination estimate in expressions like ``f <-> I_G``.
    """
    weights = gaussian_kernel(sigma)

    def smooth(plane):
        field = gray.phi(plane)
        for axis in (0, 1):
            field = _convolve_axis(field, weights, axis)
        return gray.phi_inv(field)

    if f.kind == "color":
        planes = [smooth(np.ascontiguousarray(f.data[:, :, c])) for c in range(3)]
        return Image._wrap(np.stack(planes, axis=-1))
    return Image._wrap(smooth(f.data))
