"""Binary PGM/PPM codec and the 8-bit/model-domain quantizer.

Only the binary netpbm flavors are handled: P5 (one channel) and P6
(three channels), maxval exactly 255.  Headers follow the usual rules:
ASCII tokens separated by whitespace, ``#`` comments running to end of
line, and exactly one whitespace byte between the maxval and the pixel
payload.  Extra bytes after the payload are ignored on decode; encoding
always emits the canonical header ``P5\\n<w> <h>\\n255\\n`` (or P6).

The quantizer places the 256 codes at the midpoints of a uniform
partition of the interval (a mid-riser grid):

    to_model:   v = (2 p + 1 - 256) / 256
    from_model: p = clamp(round((256 v + 255) / 2), 0, 255)

with round-half-away-from-zero.  Both maps are exact in float64 on all
256 codes, so decode -> to_model -> from_model -> encode reproduces a
file byte for byte, and ``to_model(p) == -to_model(255 - p)`` exactly.
Code 128 maps to 1/256, not 0: the grid straddles zero, it never hits it.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    MalformedHeaderError,
    TruncatedDataError,
    UnsupportedFormatError,
)
from .image import Image

__all__ = [
    "RasterBuffer",
    "decode_pnm",
    "encode_pnm",
    "read_pnm",
    "write_pnm",
    "to_model",
    "from_model",
]

_LEVELS = 256.0
_WHITESPACE = b" \t\n\r\x0b\x0c"


class RasterBuffer:
    """8-bit raster with 1 or 3 channels and maxval fixed at 255.

    ``pixels`` must be a uint8 array of shape (H, W) or (H, W, 3); it is
    copied and the copy is marked read-only.
    """

    __slots__ = ("_pixels",)

    def __init__(self, pixels):
        arr = np.array(pixels)
        if arr.dtype != np.uint8:
            raise ValueError(f"pixels must be uint8, got {arr.dtype}")
        if arr.ndim not in (2, 3) or (arr.ndim == 3 and arr.shape[2] != 3):
            raise ValueError(f"expected shape (H, W) or (H, W, 3), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"raster dimensions must be at least 1x1, got {arr.shape}")
        arr.setflags(write=False)
        self._pixels = arr

    @property
    def pixels(self):
        return self._pixels

    @property
    def width(self):
        return self._pixels.shape[1]

    @property
    def height(self):
        return self._pixels.shape[0]

    @property
    def channels(self):
        return 1 if self._pixels.ndim == 2 else 3

    @property
    def maxval(self):
        return 255

    def __repr__(self):
        kind = "P5" if self.channels == 1 else "P6"
        return f"RasterBuffer({kind}, {self.width}x{self.height})"


def _next_token(data, i, what):
    # Skip whitespace and '#' comments, then collect one token.
    n = len(data)
    while i < n:
        c = data[i]
        if c in _WHITESPACE:
            i += 1
        elif c == 0x23:  # '#'
            while i < n and data[i] not in b"\r\n":
                i += 1
        else:
            break
    start = i
    while i < n and data[i] not in _WHITESPACE and data[i] != 0x23:
        i += 1
    if start == i:
        raise MalformedHeaderError(f"missing {what} in header")
    return data[start:i], i


def _int_token(data, i, what):
    token, i = _next_token(data, i, what)
    try:
        value = int(token)
    except ValueError:
        raise MalformedHeaderError(f"{what} is not a decimal integer: {token!r}") from None
    return value, i


def decode_pnm(data):
    """Decode binary PGM/PPM bytes into a :class:`RasterBuffer`."""
    magic, i = _next_token(data, 0, "magic number")
    if magic in (b"P1", b"P2", b"P3", b"P4", b"P7"):
        raise UnsupportedFormatError(
            f"{magic.decode('ascii')} rasters are not supported; use binary P5 or P6"
        )
    if magic not in (b"P5", b"P6"):
        raise MalformedHeaderError(f"not a PGM/PPM stream (magic {magic!r})")
    channels = 1 if magic == b"P5" else 3
    width, i = _int_token(data, i, "width")
    height, i = _int_token(data, i, "height")
    maxval, i = _int_token(data, i, "maxval")
    if width < 1 or height < 1:
        raise MalformedHeaderError(f"dimensions must be positive, got {width}x{height}")
    if maxval != 255:
        raise UnsupportedFormatError(f"maxval must be 255, got {maxval}")
    if i >= len(data) or data[i] not in _WHITESPACE:
        raise MalformedHeaderError("maxval must be followed by a single whitespace byte")
    i += 1
    count = width * height * channels
    payload = data[i : i + count]
    if len(payload) < count:
        raise TruncatedDataError(
            f"expected {count} pixel bytes, found {len(payload)}"
        )
    shape = (height, width) if channels == 1 else (height, width, 3)
    return RasterBuffer(np.frombuffer(payload, dtype=np.uint8).reshape(shape))


def encode_pnm(raster):
    """Encode a :class:`RasterBuffer` as canonical binary PGM/PPM bytes."""
    magic = b"P5" if raster.channels == 1 else b"P6"
    header = b"%s\n%d %d\n255\n" % (magic, raster.width, raster.height)
    return header + raster.pixels.tobytes()


def read_pnm(path):
    """Read and decode a PGM/PPM file."""
    with open(path, "rb") as handle:
        return decode_pnm(handle.read())


def write_pnm(path, raster):
    """Encode and write a PGM/PPM file."""
    with open(path, "wb") as handle:
        handle.write(encode_pnm(raster))


def to_model(raster):
    """Map 8-bit codes onto the open interval: ``v = (2p + 1 - 256) / 256``.

    Codes 0 and 255 land on -255/256 and 255/256, code 128 on 1/256.
    The map is odd around the code midpoint and exact in float64.
    """
    p = raster.pixels.astype(np.float64)
    return Image._wrap((2.0 * p + 1.0 - _LEVELS) / _LEVELS)


def _round_half_away(x):
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def from_model(f):
    """Quantize model samples back to 8-bit codes.

    ``p = clamp(round((256 v + 255) / 2), 0, 255)`` with halves rounded
    away from zero; inverts :func:`to_model` exactly on all 256 codes.
    """
    codes = _round_half_away((f.data * _LEVELS + (_LEVELS - 1.0)) / 2.0)
    return RasterBuffer(np.clip(codes, 0.0, 255.0).astype(np.uint8))
