"""Componentwise extension of the gray-level algebra to RGB triples.

A color value is a length-3 vector of gray levels, one per channel.  All
vector-space structure is inherited channel by channel; only the inner
product and norm couple the channels, summing the per-channel log
coordinates.  Functions accept any array whose trailing axis can
broadcast against shape (3,), so they work equally on single triples and
on whole (H, W, 3) rasters.
"""

from __future__ import annotations

import numpy as np

from . import gray

__all__ = [
    "as_color",
    "broadcast_gray",
    "cadd",
    "csub",
    "cneg",
    "cscale",
    "cdot",
    "cnorm",
]


def as_color(value):
    """Validate an RGB triple, returning a float64 array of shape (3,)."""
    arr = np.asarray(value, dtype=np.float64)
    if arr.shape != (3,):
        raise ValueError(f"color value must have exactly 3 components, got {value!r}")
    if not np.all(np.isfinite(arr)) or np.any(np.abs(arr) >= 1.0):
        raise ValueError(
            f"color components must lie strictly inside (-1, 1), got {value!r}"
        )
    return arr


def broadcast_gray(c):
    """Replicate one gray level across all three channels."""
    return np.full(3, gray.as_gray(c))


def cadd(v1, v2):
    """Channelwise bounded addition."""
    return gray.gadd(np.asarray(v1), np.asarray(v2))


def csub(v1, v2):
    """Channelwise bounded subtraction."""
    return gray.gsub(np.asarray(v1), np.asarray(v2))


def cneg(v):
    """Channelwise negation."""
    return gray.gneg(np.asarray(v))


def cscale(lam, v):
    """Channelwise scaling by a real factor."""
    return gray.gscale(lam, np.asarray(v))


def cdot(v1, v2):
    """Inner product: sum over channels of the log-coordinate products."""
    prods = gray.phi(np.asarray(v1)) * gray.phi(np.asarray(v2))
    return np.sum(prods, axis=-1)


def cnorm(v):
    """Norm: sqrt of the summed squared log coordinates."""
    p = gray.phi(np.asarray(v))
    return np.sqrt(np.sum(p * p, axis=-1))
