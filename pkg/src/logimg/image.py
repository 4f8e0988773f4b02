"""Image planes over the bounded gray-level interval.

An :class:`Image` is an immutable float64 raster whose samples all lie
strictly inside (-1, 1): shape (H, W) for single-channel images, shape
(H, W, 3) for color.  The scalar algebra lifts pointwise, which makes the
set of same-shaped images a vector space; with unit pixel area the
discrete inner product ``l2_dot`` and norm ``l2_norm`` give it the usual
L2 structure.

Pointwise operations are plain vectorized kernels, so their results are
independent of any partitioning of the raster.  The inner-product
reduction accumulates row partial sums with a Neumaier correction term,
keeping the total independent of row grouping far below the 1e-9
relative contract.
"""

from __future__ import annotations

import numpy as np

from . import color, gray
from .errors import DimensionMismatchError, KindMismatchError

__all__ = [
    "Image",
    "constant_image",
    "img_add",
    "img_sub",
    "img_neg",
    "img_scale",
    "pos_part",
    "neg_part",
    "l2_dot",
    "l2_norm",
]


class Image:
    """Immutable raster of gray-level samples.

    Parameters
    ----------
    data : array_like
        Samples with shape (H, W) or (H, W, 3), every value strictly
        inside (-1, 1) and finite.  The array is copied and the copy is
        marked read-only.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.float64)
        if arr.ndim not in (2, 3) or (arr.ndim == 3 and arr.shape[2] != 3):
            raise ValueError(
                f"expected shape (H, W) or (H, W, 3), got {arr.shape}"
            )
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be at least 1x1, got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("image samples must be finite")
        if np.any(np.abs(arr) >= 1.0):
            raise ValueError("image samples must lie strictly inside (-1, 1)")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def _wrap(cls, arr):
        # Trusted path for freshly computed kernel outputs: the clamped
        # operations guarantee validity, so skip the re-scan and the copy.
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._data = arr
        return obj

    @property
    def data(self):
        """The underlying read-only float64 array."""
        return self._data

    @property
    def width(self):
        return self._data.shape[1]

    @property
    def height(self):
        return self._data.shape[0]

    @property
    def kind(self):
        """'gray' for single-channel images, 'color' for three-channel."""
        return "gray" if self._data.ndim == 2 else "color"

    @property
    def shape(self):
        return self._data.shape

    def pixel(self, x, y):
        """Sample at column ``x``, row ``y``.

        Returns a float for gray images, a (3,) array for color images.
        """
        if not (0 <= x < self.width and 0 <= y < self.height):
            raise IndexError(
                f"pixel ({x}, {y}) outside {self.width}x{self.height} image"
            )
        value = self._data[y, x]
        return float(value) if self._data.ndim == 2 else value.copy()

    def __repr__(self):
        return f"Image({self.width}x{self.height}, {self.kind})"


def _check_pair(f1, f2):
    if f1.data.shape[:2] != f2.data.shape[:2]:
        raise DimensionMismatchError(
            f"images have different dimensions: "
            f"{f1.width}x{f1.height} vs {f2.width}x{f2.height}"
        )
    if f1.kind != f2.kind:
        raise KindMismatchError(
            f"cannot combine {f1.kind} image with {f2.kind} image; "
            f"broadcast the single-channel operand explicitly"
        )


def constant_image(width, height, value):
    """Uniform image of the given value (gray scalar or RGB triple).

    Gray scalars produce a (height, width) plane; length-3 values produce
    a (height, width, 3) plane.
    """
    if width < 1 or height < 1:
        raise ValueError(f"image dimensions must be at least 1x1, got {width}x{height}")
    if np.ndim(value) == 0:
        return Image._wrap(np.full((height, width), gray.as_gray(value)))
    return Image._wrap(np.full((height, width, 3), color.as_color(value)))


def img_add(f1, f2):
    """Pointwise bounded addition of two same-shaped, same-kind images."""
    _check_pair(f1, f2)
    return Image._wrap(gray.gadd(f1.data, f2.data))


def img_sub(f1, f2):
    """Pointwise bounded subtraction."""
    _check_pair(f1, f2)
    return Image._wrap(gray.gsub(f1.data, f2.data))


def img_neg(f):
    """Pointwise negation."""
    return Image._wrap(gray.gneg(f.data))


def img_scale(lam, f):
    """Pointwise scaling by a real factor."""
    return Image._wrap(gray.gscale(float(lam), f.data))


def pos_part(f):
    """Positive part: samples below 0 are replaced by 0.

    For color images the cut applies per channel.  Together with
    :func:`neg_part` this decomposes ``f``: adding the two parts
    pointwise returns the original image.
    """
    return Image._wrap(np.maximum(f.data, 0.0))


def neg_part(f):
    """Negative part: samples above 0 are replaced by 0."""
    return Image._wrap(np.minimum(f.data, 0.0))


def _compensated_sum(values):
    # Row partials via numpy's pairwise summation, combined with a
    # Neumaier correction so the grand total does not depend on how the
    # rows are grouped into bands.
    partials = np.sum(values.reshape(values.shape[0], -1), axis=1)
    total = 0.0
    correction = 0.0
    for p in partials.tolist():
        t = total + p
        if abs(total) >= abs(p):
            correction += (total - t) + p
        else:
            correction += (p - t) + total
        total = t
    return total + correction


def l2_dot(f1, f2):
    """Discrete L2 inner product with unit pixel area.

    Parameters
    ----------
    f1, f2 : Image
        Same dimensions and same kind.

    Returns
    -------
    float
        Sum over all pixels (and channels, for color images) of the
        products of log coordinates.
    """
    _check_pair(f1, f2)
    return _compensated_sum(gray.phi(f1.data) * gray.phi(f2.data))


def l2_norm(f):
    """Discrete L2 norm: sqrt(l2_dot(f, f))."""
    return float(np.sqrt(l2_dot(f, f)))
