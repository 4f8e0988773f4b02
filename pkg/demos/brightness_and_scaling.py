"""
Brightness shifts and contrast scaling on a synthetic gradient
==============================================================

Classical pixel arithmetic overflows: adding a constant pushes bright
pixels past white and they clip.  Here addition happens on the bounded
interval, so every result is still a displayable image.
"""

from pathlib import Path

from logimg import apply_expr, l2_norm
from logimg.raster import from_model, to_model, write_pnm
from logimg.synth import gray_gradient

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# a left-to-right ramp covering the full 8-bit range
raster = gray_gradient(256, 64)
f = to_model(raster)
write_pnm(out / "ramp.pgm", raster)

# brighten: f <+> 0.6 lifts mid-tones a lot, the white end barely moves
bright = apply_expr("f <+> 0.6", {"f": f})
write_pnm(out / "ramp_bright.pgm", from_model(bright))

# darken with the inverse constant; this undoes the shift up to rounding
restored = apply_expr("g <-> 0.6", {"f": f, "g": bright})
write_pnm(out / "ramp_restored.pgm", from_model(restored))

# scale factors > 1 stretch contrast around mid-gray, < 1 flatten it
for lam in (0.25, 2, 7):
    img = apply_expr(f"{lam} <x> f", {"f": f})
    write_pnm(out / f"ramp_x{lam}.pgm", from_model(img))

print("input norm     ", l2_norm(f))
print("brightened norm", l2_norm(bright))
print("7x scaled norm ", l2_norm(apply_expr("7 <x> f", {"f": f})))
print("wrote", len(list(out.glob("ramp*.pgm"))), "rasters to", out)
