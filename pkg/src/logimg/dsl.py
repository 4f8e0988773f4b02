"""A small expression language for bounded image transforms.

Grammar (ASCII operator spellings)::

    expr    := term (("<+>" | "<->") term)*
    term    := number "<x>" term
             | unary
    unary   := "<->" unary
             | atom
    atom    := number
             | ident
             | ident "_+"
             | ident "_-"
             | "(" number "," number "," number ")"
             | "(" expr ")"

``<+>`` and ``<->`` associate left and bind loosest; ``<x>`` binds
tighter and chains to the right; prefix ``<->`` (negation) binds tighter
still.  A ``<->`` after an operand is the binary form, anywhere else it
is negation.

A bare number in operand position is a gray constant and must lie
strictly inside (-1, 1).  The number on the left of ``<x>`` is an
unrestricted real scale factor.  A parenthesized comma triple is a color
constant.  Identifiers start with a letter, may contain letters, digits
and underscores, and may not end with an underscore, so ``I_G`` is one
identifier while ``f_+`` is the positive part of ``f``.  Numbers may
carry a leading minus: the language has no bare binary minus, so this is
unambiguous, and color components like ``(0.449,-0.241,-0.164)`` need it.

The pipeline is ``parse`` -> ``typecheck`` -> ``evaluate``.  The
typechecker tags the tree gray or color, wraps single-channel constant
subtrees used in three-channel context in a :class:`Broadcast` node, and
rejects color constants combined with gray images.  The evaluator keeps
constants lazy: combining an image with a constant runs the same
vectorized kernel that a materialized constant plane would, so results
are bit-identical to hand-composed image-space calls.  ``pretty``
renders a tree back to canonical text with minimal parentheses, and
``parse(pretty(e))`` reproduces ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import color, gray
from .errors import (
    ExprSyntaxError,
    KindMismatchError,
    ShapeMismatchError,
    UnboundVariableError,
)
from .image import Image, constant_image, img_add, img_neg, img_scale, img_sub, neg_part, pos_part

__all__ = [
    "ImageVar",
    "GrayConst",
    "ColorConst",
    "ScalarLit",
    "Add",
    "Sub",
    "Neg",
    "Scale",
    "PosPart",
    "NegPart",
    "Broadcast",
    "TypedExpr",
    "parse",
    "typecheck",
    "evaluate",
    "pretty",
    "apply_expr",
]

_IDENT_RE = re.compile(r"[A-Za-z](?:[A-Za-z0-9_]*[A-Za-z0-9])?")


# ---------------------------------------------------------------------------
# Syntax tree


@dataclass(frozen=True)
class ImageVar:
    """Reference to a bound name (an image or a constant)."""

    name: str

    def __post_init__(self):
        if not _IDENT_RE.fullmatch(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")


@dataclass(frozen=True)
class GrayConst:
    """Literal gray level, strictly inside (-1, 1)."""

    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", gray.as_gray(self.value))


@dataclass(frozen=True)
class ColorConst:
    """Literal RGB triple of gray levels."""

    red: float
    green: float
    blue: float

    def __post_init__(self):
        r, g, b = color.as_color((self.red, self.green, self.blue))
        object.__setattr__(self, "red", float(r))
        object.__setattr__(self, "green", float(g))
        object.__setattr__(self, "blue", float(b))


@dataclass(frozen=True)
class ScalarLit:
    """Literal real scale factor."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not np.isfinite(v):
            raise ValueError(f"scale factor must be finite, got {self.value!r}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Scale:
    factor: ScalarLit
    operand: object

    def __post_init__(self):
        if not isinstance(self.factor, ScalarLit):
            object.__setattr__(self, "factor", ScalarLit(self.factor))


@dataclass(frozen=True)
class PosPart:
    operand: object


@dataclass(frozen=True)
class NegPart:
    operand: object


@dataclass(frozen=True)
class Broadcast:
    """Typechecker-inserted: replicate a gray constant across channels."""

    operand: object


@dataclass(frozen=True)
class TypedExpr:
    """A typechecked tree plus its overall kind, 'gray' or 'color'."""

    expr: object
    kind: str


# ---------------------------------------------------------------------------
# Lexer

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<add><\+>)
    | (?P<subneg><->)
    | (?P<scale><x>)
    | (?P<number>-?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
    | (?P<ident>[A-Za-z](?:[A-Za-z0-9_]*[A-Za-z0-9])?)
    | (?P<pospart>_\+)
    | (?P<negpart>_-)
    | (?P<lparen>\()
    | (?P<rparen>\))
    | (?P<comma>,)
    """,
    re.VERBOSE,
)

_TOKEN_NAMES = {
    "add": "'<+>'",
    "subneg": "'<->'",
    "scale": "'<x>'",
    "number": "number",
    "ident": "identifier",
    "pospart": "'_+'",
    "negpart": "'_-'",
    "lparen": "'('",
    "rparen": "')'",
    "comma": "','",
    "end": "end of input",
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int  # 1-based character position


def _lex(text):
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise ExprSyntaxError(
                "unexpected character",
                pos=i + 1,
                expected=("number", "identifier", "'('", "operator"),
                found=repr(text[i]),
            )
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, m.group(), i + 1))
        i = m.end()
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self, ahead=0):
        j = min(self.i + ahead, len(self.tokens) - 1)
        return self.tokens[j]

    def advance(self):
        tok = self.tokens[self.i]
        if tok.kind != "end":
            self.i += 1
        return tok

    def fail(self, expected):
        tok = self.peek()
        raise ExprSyntaxError(
            "unexpected token",
            pos=tok.pos,
            expected=tuple(expected),
            found=_TOKEN_NAMES[tok.kind] if tok.kind == "end" else repr(tok.text),
        )

    def expect(self, kind, extra_expected=()):
        if self.peek().kind != kind:
            self.fail((_TOKEN_NAMES[kind],) + tuple(extra_expected))
        return self.advance()

    def _number_value(self, tok, what):
        value = float(tok.text)  # the token regex guarantees a parseable literal
        if not np.isfinite(value):
            raise ExprSyntaxError(f"{what} must be finite", pos=tok.pos, found=repr(tok.text))
        return value

    def _gray_const(self, tok):
        value = self._number_value(tok, "gray constant")
        try:
            return GrayConst(value)
        except ValueError:
            raise ExprSyntaxError(
                "gray constant must lie strictly inside (-1, 1)",
                pos=tok.pos,
                found=repr(tok.text),
            ) from None

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().kind in ("add", "subneg"):
            op = self.advance()
            right = self.parse_term()
            node = Add(node, right) if op.kind == "add" else Sub(node, right)
        return node

    def parse_term(self):
        # A number directly followed by <x> is a scale factor, not a
        # gray constant; scale chains associate to the right.
        if self.peek().kind == "number" and self.peek(1).kind == "scale":
            tok = self.advance()
            factor = ScalarLit(self._number_value(tok, "scale factor"))
            self.advance()  # <x>
            return Scale(factor, self.parse_term())
        return self.parse_unary()

    def parse_unary(self):
        if self.peek().kind == "subneg":
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self):
        tok = self.peek()
        if tok.kind == "number":
            return self._gray_const(self.advance())
        if tok.kind == "ident":
            self.advance()
            node = ImageVar(tok.text)
            if self.peek().kind == "pospart":
                self.advance()
                return PosPart(node)
            if self.peek().kind == "negpart":
                self.advance()
                return NegPart(node)
            return node
        if tok.kind == "lparen":
            self.advance()
            if self.peek().kind == "number" and self.peek(1).kind == "comma":
                return self._color_const()
            node = self.parse_expr()
            self.expect("rparen", extra_expected=("'<+>'", "'<->'"))
            return node
        self.fail(("number", "identifier", "'('", "'<->'"))

    def _color_const(self):
        components = []
        for index in range(3):
            tok = self.expect("number")
            value = self._number_value(tok, "color component")
            if not -1.0 < value < 1.0:
                raise ExprSyntaxError(
                    "color component must lie strictly inside (-1, 1)",
                    pos=tok.pos,
                    found=repr(tok.text),
                )
            components.append(value)
            if index < 2:
                self.expect("comma")
        self.expect("rparen", extra_expected=("','",))
        return ColorConst(*components)


def parse(text):
    """Parse expression text into a syntax tree.

    Raises :class:`~logimg.errors.ExprSyntaxError` with a 1-based
    character position and the acceptable-token set on any malformed
    input.
    """
    parser = _Parser(_lex(text))
    node = parser.parse_expr()
    if parser.peek().kind != "end":
        parser.fail(("'<+>'", "'<->'", "end of input"))
    return node


# ---------------------------------------------------------------------------
# Typechecker

_GRAY_IMAGE = "gray image"
_COLOR_IMAGE = "color image"
_GRAY_CONST = "gray constant"
_COLOR_CONST = "color constant"


def _binding_kind(name, value, anchor):
    if isinstance(value, Image):
        if value.data.shape[:2] != anchor.data.shape[:2]:
            raise ShapeMismatchError(name, value.shape, anchor.shape)
        return _GRAY_IMAGE if value.kind == "gray" else _COLOR_IMAGE
    if np.ndim(value) == 0:
        gray.as_gray(value)
        return _GRAY_CONST
    color.as_color(value)
    return _COLOR_CONST


def typecheck(e, env):
    """Infer the expression's kind against the bindings in ``env``.

    ``env`` maps variable names to :class:`Image` objects, scalar gray
    levels, or RGB triples; ``'f'`` must be bound to the input image.
    Returns a :class:`TypedExpr` whose tree has a :class:`Broadcast`
    node wrapped around every single-channel constant subtree that meets
    a three-channel operand.  Raises ``UnboundVariableError``,
    ``KindMismatchError`` (with the offending node's path), or
    ``ShapeMismatchError``.
    """
    if "f" not in env:
        raise UnboundVariableError("f")
    anchor = env["f"]
    if not isinstance(anchor, Image):
        raise ValueError("'f' must be bound to an image")

    def visit(node, path):
        if isinstance(node, ImageVar):
            if node.name not in env:
                raise UnboundVariableError(node.name)
            return _binding_kind(node.name, env[node.name], anchor), node
        if isinstance(node, GrayConst):
            return _GRAY_CONST, node
        if isinstance(node, ColorConst):
            return _COLOR_CONST, node
        if isinstance(node, Broadcast):
            kind, operand = visit(node.operand, path + ".operand")
            if kind != _GRAY_CONST:
                raise KindMismatchError(
                    f"broadcast of a {kind} at {path} (wants a gray constant)"
                )
            return _COLOR_CONST, Broadcast(operand)
        if isinstance(node, Neg):
            kind, operand = visit(node.operand, path + ".operand")
            return kind, Neg(operand)
        if isinstance(node, (PosPart, NegPart)):
            kind, operand = visit(node.operand, path + ".operand")
            return kind, type(node)(operand)
        if isinstance(node, Scale):
            kind, operand = visit(node.operand, path + ".operand")
            return kind, Scale(node.factor, operand)
        if isinstance(node, (Add, Sub)):
            lk, left = visit(node.left, path + ".left")
            rk, right = visit(node.right, path + ".right")
            if lk == _GRAY_CONST and rk in (_COLOR_CONST, _COLOR_IMAGE):
                lk, left = _COLOR_CONST, Broadcast(left)
            if rk == _GRAY_CONST and lk in (_COLOR_CONST, _COLOR_IMAGE):
                rk, right = _COLOR_CONST, Broadcast(right)
            colors = (_COLOR_IMAGE, _COLOR_CONST)
            grays = (_GRAY_IMAGE, _GRAY_CONST)
            if (lk in colors) != (rk in colors):
                raise KindMismatchError(
                    f"cannot combine {lk} with {rk} at {path}"
                )
            if _GRAY_IMAGE in (lk, rk) or _COLOR_IMAGE in (lk, rk):
                kind = _COLOR_IMAGE if lk in colors else _GRAY_IMAGE
            else:
                kind = lk
            return kind, type(node)(left, right)
        raise TypeError(f"not an expression node: {node!r}")

    kind, tree = visit(e, "expr")
    overall = "color" if kind in (_COLOR_IMAGE, _COLOR_CONST) else "gray"
    return TypedExpr(tree, overall)


# ---------------------------------------------------------------------------
# Evaluator


def _resolve(name, env):
    if name not in env:
        raise UnboundVariableError(name)
    value = env[name]
    if isinstance(value, Image):
        return value
    if np.ndim(value) == 0:
        return gray.as_gray(value)
    return color.as_color(value)


def _combine(a, b, img_op, raw_op):
    if isinstance(a, Image) and isinstance(b, Image):
        return img_op(a, b)
    da = a.data if isinstance(a, Image) else a
    db = b.data if isinstance(b, Image) else b
    out = raw_op(da, db)
    if isinstance(a, Image) or isinstance(b, Image):
        return Image._wrap(out)
    return out


def evaluate(typed, env):
    """Evaluate a typechecked expression to an :class:`Image`.

    Constants stay lazy: an image combined with a constant runs the same
    broadcasting kernel as the materialized constant plane, bit for bit.
    A pure-constant expression is materialized at the dimensions of the
    bound input image ``f``.
    """
    if not isinstance(typed, TypedExpr):
        raise TypeError("evaluate expects the result of typecheck")
    if "f" not in env or not isinstance(env["f"], Image):
        raise UnboundVariableError("f")
    f = env["f"]

    def run(node):
        if isinstance(node, ImageVar):
            return _resolve(node.name, env)
        if isinstance(node, GrayConst):
            return node.value
        if isinstance(node, ColorConst):
            return np.array([node.red, node.green, node.blue])
        if isinstance(node, Broadcast):
            return color.broadcast_gray(run(node.operand))
        if isinstance(node, Neg):
            v = run(node.operand)
            return img_neg(v) if isinstance(v, Image) else gray.gneg(v)
        if isinstance(node, Scale):
            v = run(node.operand)
            if isinstance(v, Image):
                return img_scale(node.factor.value, v)
            return gray.gscale(node.factor.value, v)
        if isinstance(node, PosPart):
            v = run(node.operand)
            return pos_part(v) if isinstance(v, Image) else np.maximum(v, 0.0)
        if isinstance(node, NegPart):
            v = run(node.operand)
            return neg_part(v) if isinstance(v, Image) else np.minimum(v, 0.0)
        if isinstance(node, Add):
            return _combine(run(node.left), run(node.right), img_add, gray.gadd)
        if isinstance(node, Sub):
            return _combine(run(node.left), run(node.right), img_sub, gray.gsub)
        raise TypeError(f"not an expression node: {node!r}")

    result = run(typed.expr)
    if isinstance(result, Image):
        return result
    return constant_image(f.width, f.height, result)


def apply_expr(text, env):
    """Parse, typecheck and evaluate expression text in one call."""
    return evaluate(typecheck(parse(text), env), env)


# ---------------------------------------------------------------------------
# Pretty printer

_LEVEL_ADD, _LEVEL_SCALE, _LEVEL_UNARY, _LEVEL_ATOM = 0, 1, 2, 3


def _fmt_number(value):
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def _render(node, min_level):
    if isinstance(node, ImageVar):
        return node.name
    if isinstance(node, GrayConst):
        return _fmt_number(node.value)
    if isinstance(node, ColorConst):
        parts = ", ".join(_fmt_number(c) for c in (node.red, node.green, node.blue))
        return f"({parts})"
    if isinstance(node, (PosPart, NegPart)):
        if not isinstance(node.operand, ImageVar):
            raise ValueError("part suffixes render only on plain variables")
        suffix = "_+" if isinstance(node, PosPart) else "_-"
        return node.operand.name + suffix
    if isinstance(node, Broadcast):
        return _render(node.operand, min_level)

    if isinstance(node, (Add, Sub)):
        op = "<+>" if isinstance(node, Add) else "<->"
        text = f"{_render(node.left, _LEVEL_ADD)} {op} {_render(node.right, _LEVEL_SCALE)}"
        level = _LEVEL_ADD
    elif isinstance(node, Scale):
        text = f"{_fmt_number(node.factor.value)} <x> {_render(node.operand, _LEVEL_SCALE)}"
        level = _LEVEL_SCALE
    elif isinstance(node, Neg):
        text = f"<-> {_render(node.operand, _LEVEL_UNARY)}"
        level = _LEVEL_UNARY
    else:
        raise TypeError(f"not an expression node: {node!r}")
    return f"({text})" if level < min_level else text


def pretty(e):
    """Render a tree as canonical expression text with minimal parentheses.

    ``parse(pretty(e))`` reproduces ``e`` structurally.  ``Broadcast``
    nodes are invisible (they have no surface syntax).
    """
    node = e.expr if isinstance(e, TypedExpr) else e
    return _render(node, _LEVEL_ADD)
