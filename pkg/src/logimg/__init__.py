"""Bounded logarithmic image arithmetic.

Gray levels live in the open interval (-1, 1).  Addition, subtraction
and real-scalar multiplication are carried through the isomorphism
phi = arctanh onto the real line, so every composite value stays inside
the interval: brightening never saturates to white, darkening never
saturates to black.  The same operations extend componentwise to RGB
triples and pointwise to images, which form a vector space with an
inner product and norm.  On top of the algebra sit contrast operators,
a small expression language for pointwise transforms, a binary PGM/PPM
codec with an open-interval quantizer, and a command-line interface.
"""

from .blur import gaussian_correction, gaussian_kernel
from .color import as_color, cadd, cdot, cneg, cnorm, cscale, csub
from .contrast import abs_contrast, contrast_map, pixel_contrast, rel_contrast
from .dsl import apply_expr, evaluate, parse, pretty, typecheck
from .errors import (
    BindingError,
    DimensionMismatchError,
    DimensionTooSmallError,
    ExprError,
    ExprSyntaxError,
    KindMismatchError,
    LogimgError,
    MalformedHeaderError,
    SamePixelError,
    ShapeMismatchError,
    TruncatedDataError,
    UnboundVariableError,
    UnsupportedFormatError,
)
from .gray import GRAY_MAX, as_gray, gadd, gdot, gneg, gnorm, gscale, gsub, phi, phi_inv
from .image import (
    Image,
    constant_image,
    img_add,
    img_neg,
    img_scale,
    img_sub,
    l2_dot,
    l2_norm,
    neg_part,
    pos_part,
)
from .raster import (
    RasterBuffer,
    decode_pnm,
    encode_pnm,
    from_model,
    read_pnm,
    to_model,
    write_pnm,
)

__version__ = "0.1.0"

__all__ = [
    "GRAY_MAX",
    "as_gray",
    "phi",
    "phi_inv",
    "gadd",
    "gsub",
    "gneg",
    "gscale",
    "gdot",
    "gnorm",
    "as_color",
    "cadd",
    "csub",
    "cneg",
    "cscale",
    "cdot",
    "cnorm",
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
    "rel_contrast",
    "abs_contrast",
    "pixel_contrast",
    "contrast_map",
    "parse",
    "typecheck",
    "evaluate",
    "pretty",
    "apply_expr",
    "RasterBuffer",
    "decode_pnm",
    "encode_pnm",
    "read_pnm",
    "write_pnm",
    "to_model",
    "from_model",
    "gaussian_kernel",
    "gaussian_correction",
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
    "__version__",
]
