"""
A tour of the transform expression language
===========================================

Transforms are written as text: <+> and <-> combine operands, <x>
scales, prefix <-> negates, f_+ / f_- take parts.  The pipeline is
parse -> typecheck -> evaluate, and each stage reports precise errors.
"""

import numpy as np

from logimg import apply_expr, evaluate, parse, pretty, typecheck
from logimg.errors import ExprSyntaxError, KindMismatchError, UnboundVariableError
from logimg.raster import to_model
from logimg.synth import color_gradient, gray_gradient

fg = to_model(gray_gradient(64, 48))
fc = to_model(color_gradient(64, 48))

# parse returns a tree; pretty prints it back with minimal parentheses
tree = parse("1.43 <x> f <-> 1.39 <x> v <-> I_G")
print("canonical form:", pretty(tree))

# the typechecker tags the whole tree gray or color
print("gray input  ->", typecheck(parse("2 <x> (f <+> 0.5)"), {"f": fg}).kind)
print("color input ->", typecheck(parse("2 <x> (f <+> 0.5)"), {"f": fc}).kind)

# evaluation binds names to images, scalars, or color triples
env = {"f": fc, "v": (0.449, -0.241, -0.164)}
img = evaluate(typecheck(parse("2.5 <x> (f <-> 0.7 <x> v)"), env), env)
print("result kind/shape:", img.kind, img.shape)

# apply_expr does all three stages in one call
same = apply_expr("2.5 <x> (f <-> 0.7 <x> v)", env)
print("one-call result identical:", np.array_equal(same.data, img.data))

# errors carry positions and expectations
try:
    parse("f <+> ")
except ExprSyntaxError as e:
    print("syntax: ", e)

try:
    typecheck(parse("f <-> g"), {"f": fg})
except UnboundVariableError as e:
    print("binding:", e)

try:
    typecheck(parse("f <+> (0.1, 0.2, 0.3)"), {"f": fg})
except KindMismatchError as e:
    print("typing: ", e)
