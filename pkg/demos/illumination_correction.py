"""
Flattening uneven illumination
==============================

A vignetted image is modeled as content plus a slowly varying
illumination field.  Blurring the image estimates that field, bounded
subtraction removes it, and a final scale-and-shift restores punch.
"""

from pathlib import Path

import numpy as np

from logimg import apply_expr, gaussian_correction
from logimg.raster import from_model, to_model, write_pnm
from logimg.synth import checkerboard, vignette

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# checkerboard content multiplied into a radial falloff, via the codes
content = checkerboard(192, 144, tile=12, low=96, high=160).pixels.astype(float)
falloff = vignette(192, 144, low=40, high=230).pixels.astype(float)
codes = np.clip(content * falloff / 255.0, 0, 255).astype(np.uint8)

from logimg.raster import RasterBuffer

raster = RasterBuffer(codes)
f = to_model(raster)
write_pnm(out / "uneven.pgm", raster)

# the illumination estimate: a heavy blur of the input itself
ig = gaussian_correction(f, 16.0)
write_pnm(out / "illumination.pgm", from_model(ig))

# subtract the estimate, then rescale the residue
flat = apply_expr("f <-> I_G", {"f": f, "I_G": ig})
write_pnm(out / "flattened.pgm", from_model(flat))

final = apply_expr("1.7 <x> h <+> 0.2", {"f": f, "h": flat})
write_pnm(out / "flattened_boosted.pgm", from_model(final))

# corner vs center brightness, before and after
def corner_center(img):
    d = img.data
    return float(d[:16, :16].mean()), float(d[64:80, 88:104].mean())

print("corner/center before:", np.round(corner_center(f), 3))
print("corner/center after: ", np.round(corner_center(final), 3))
print("wrote 4 rasters to", out)
print("equivalent CLI run:")
print("  logimg apply --expr 'f <-> I_G' --bind I_G=blur:16 -i uneven.pgm -o flat.pgm")
