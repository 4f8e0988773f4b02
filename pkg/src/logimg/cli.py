"""Command-line interface.

Four verbs::

    logimg apply    --expr E [--bind NAME=VALUE]... -i IN -o OUT
    logimg contrast --mode horizontal|vertical|pixel [--neighborhood 4|8]
                    [--display magnitude|signed] -i IN -o OUT
    logimg stats    -i IN [--against OTHER]
    logimg info     -i IN

Exit status: 0 on success, 1 on a usage error, 2 on an I/O or file
format error, 3 on an expression error (syntax, types, bindings).  Every
failure prints a one-line diagnostic on standard error.

Binding values: ``name=0.5`` binds a gray constant, ``name=r,g,b`` a
color triple, ``name=@path`` an image decoded from a PGM/PPM file, and
``name=blur:SIGMA`` the smoothed version of the input image (separable
Gaussian applied in the unbounded domain) for use as an illumination
estimate, e.g. ``--bind I_G=blur:8``.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import blur, color, contrast, dsl, gray, image, raster
from .errors import (
    BindingError,
    DimensionMismatchError,
    DimensionTooSmallError,
    ExprError,
    KindMismatchError,
    LogimgError,
    MalformedHeaderError,
    TruncatedDataError,
    UnsupportedFormatError,
)

__all__ = ["run", "main"]


class _UsageError(Exception):
    pass


class _FormatError(Exception):
    """Input data unsuitable for the requested operation (exit 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# Bindings


def _parse_binding(text):
    name, sep, value = text.partition("=")
    if not sep or not value:
        raise BindingError(f"binding must look like name=value, got {text!r}")
    if not dsl._IDENT_RE.fullmatch(name):
        raise BindingError(f"invalid binding name {name!r}")
    if name == "f":
        raise BindingError("'f' is reserved for the input image")
    if value.startswith("@"):
        return name, ("image", value[1:])
    if value.startswith("blur:"):
        try:
            sigma = float(value[5:])
        except ValueError:
            raise BindingError(f"bad blur sigma in {text!r}") from None
        if not (np.isfinite(sigma) and sigma > 0):
            raise BindingError("blur sigma must be positive and finite")
        return name, ("blur", sigma)
    if "," in value:
        parts = value.split(",")
        if len(parts) != 3:
            raise BindingError(f"color binding needs three components, got {text!r}")
        try:
            triple = color.as_color([float(p) for p in parts])
        except ValueError as e:
            raise BindingError(f"bad color binding {text!r}: {e}") from None
        return name, ("color", tuple(triple))
    try:
        level = gray.as_gray(float(value))
    except ValueError as e:
        raise BindingError(f"bad gray binding {text!r}: {e}") from None
    return name, ("gray", level)


def _collect_bindings(texts):
    specs = {}
    for text in texts:
        name, spec = _parse_binding(text)
        if name in specs:
            raise BindingError(f"duplicate binding for {name!r}")
        specs[name] = spec
    return specs


def _resolve_bindings(f, specs):
    env = {"f": f}
    for name, (kind, value) in specs.items():
        if kind == "image":
            env[name] = raster.to_model(raster.read_pnm(value))
        elif kind == "blur":
            env[name] = blur.gaussian_correction(f, value)
        else:
            env[name] = value
    return env


# ---------------------------------------------------------------------------
# Verbs


def _load_model(path):
    return raster.to_model(raster.read_pnm(path))


def _cmd_apply(args):
    f = _load_model(args.input)
    env = _resolve_bindings(f, _collect_bindings(args.bind))
    result = dsl.apply_expr(args.expr, env)
    raster.write_pnm(args.output, raster.from_model(result))
    return 0


def _magnitude_buffer(img):
    codes = np.clip(raster._round_half_away(np.abs(img.data) * 255.0), 0.0, 255.0)
    return raster.RasterBuffer(codes.astype(np.uint8))


def _cmd_contrast(args):
    f = _load_model(args.input)
    try:
        cmap = contrast.contrast_map(f, args.mode, args.neighborhood)
    except DimensionTooSmallError as e:
        raise _FormatError(str(e)) from None
    if args.display == "signed":
        buf = raster.from_model(cmap)
    else:
        buf = _magnitude_buffer(cmap)
    raster.write_pnm(args.output, buf)
    return 0


def _cmd_stats(args):
    f = _load_model(args.input)
    print(f"l2_norm={image.l2_norm(f):.15g}")
    if args.against is not None:
        g = _load_model(args.against)
        try:
            d = image.l2_dot(f, g)
        except (DimensionMismatchError, KindMismatchError) as e:
            raise _FormatError(str(e)) from None
        print(f"l2_dot={d:.15g}")
    return 0


def _cmd_info(args):
    buf = raster.read_pnm(args.input)
    print(f"width={buf.width}")
    print(f"height={buf.height}")
    print(f"kind={'gray' if buf.channels == 1 else 'color'}")
    return 0


# ---------------------------------------------------------------------------
# Argument plumbing


def _build_parser():
    parser = _Parser(
        prog="logimg",
        description="Bounded logarithmic image arithmetic on PGM/PPM rasters.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p_apply = sub.add_parser("apply", help="evaluate a transform expression")
    p_apply.add_argument("--expr", required=True, help="transform expression, e.g. 'f <+> 0.5'")
    p_apply.add_argument(
        "--bind",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="bind a variable: c, r,g,b, @path, or blur:SIGMA (repeatable)",
    )
    p_apply.add_argument("-i", "--input", required=True, help="input PGM/PPM file")
    p_apply.add_argument("-o", "--output", required=True, help="output PGM/PPM file")
    p_apply.set_defaults(handler=_cmd_apply)

    p_contrast = sub.add_parser("contrast", help="emit a contrast map")
    p_contrast.add_argument(
        "--mode", required=True, choices=("horizontal", "vertical", "pixel")
    )
    p_contrast.add_argument("--neighborhood", type=int, choices=(4, 8), default=4)
    p_contrast.add_argument(
        "--display",
        choices=("magnitude", "signed"),
        default="magnitude",
        help="magnitude renders 0 as black; signed renders 0 as mid-gray",
    )
    p_contrast.add_argument("-i", "--input", required=True)
    p_contrast.add_argument("-o", "--output", required=True)
    p_contrast.set_defaults(handler=_cmd_contrast)

    p_stats = sub.add_parser("stats", help="print norm (and dot product) lines")
    p_stats.add_argument("-i", "--input", required=True)
    p_stats.add_argument("--against", metavar="OTHER", help="second image for l2_dot")
    p_stats.set_defaults(handler=_cmd_stats)

    p_info = sub.add_parser("info", help="print raster dimensions and kind")
    p_info.add_argument("-i", "--input", required=True)
    p_info.set_defaults(handler=_cmd_info)

    return parser


def run(argv=None):
    """Run one invocation; returns the exit status instead of exiting."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(f"logimg: error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else int(e.code)
    try:
        return args.handler(args)
    except (ExprError, KindMismatchError, DimensionMismatchError) as e:
        print(f"logimg: {e}", file=sys.stderr)
        return 3
    except (
        MalformedHeaderError,
        UnsupportedFormatError,
        TruncatedDataError,
        _FormatError,
        OSError,
        LogimgError,
    ) as e:
        print(f"logimg: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
