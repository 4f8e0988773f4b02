"""Exception types shared across the package."""

__all__ = [
    "LogimgError",
    "DimensionMismatchError",
    "KindMismatchError",
    "SamePixelError",
    "DimensionTooSmallError",
    "ExprError",
    "ExprSyntaxError",
    "UnboundVariableError",
    "ShapeMismatchError",
    "BindingError",
    "MalformedHeaderError",
    "UnsupportedFormatError",
    "TruncatedDataError",
]


class LogimgError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(LogimgError):
    """Two images with different raster dimensions were combined."""


class KindMismatchError(LogimgError):
    """Single-channel and three-channel operands were mixed."""


class SamePixelError(LogimgError):
    """Contrast between a pixel and itself is undefined."""


class DimensionTooSmallError(LogimgError):
    """The image is too small for the requested contrast map."""


class ExprError(LogimgError):
    """Base class for transform-expression errors."""


class ExprSyntaxError(ExprError):
    """Malformed expression text.

    Attributes
    ----------
    pos : int
        1-based character position of the offending input.
    expected : tuple of str
        Token descriptions that would have been accepted there.
    found : str or None
        What was found instead, when known.
    """

    def __init__(self, message, pos, expected=(), found=None):
        self.pos = int(pos)
        self.expected = tuple(expected)
        self.found = found
        detail = f"{message} at position {self.pos}"
        if found is not None:
            detail += f" (found {found})"
        if self.expected:
            detail += f"; expected {', '.join(self.expected)}"
        super().__init__(detail)


class UnboundVariableError(ExprError):
    """An expression names a variable with no binding."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class ShapeMismatchError(ExprError):
    """A bound image does not share the input image's dimensions."""

    def __init__(self, name, shape, expected):
        self.name = name
        super().__init__(
            f"binding {name!r} has dimensions {shape[1]}x{shape[0]}, "
            f"input image is {expected[1]}x{expected[0]}"
        )


class BindingError(ExprError):
    """A command-line binding could not be parsed."""


class MalformedHeaderError(LogimgError):
    """The raster header is not well formed."""


class UnsupportedFormatError(LogimgError):
    """The raster is a recognized format this package does not handle."""


class TruncatedDataError(LogimgError):
    """The raster payload ends before the declared pixel count."""
