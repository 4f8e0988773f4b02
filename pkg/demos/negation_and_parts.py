"""
Negatives and the positive/negative decomposition
=================================================

Negation flips an image around mid-gray.  Every image also splits into
a part above mid-gray and a part below it, and the bounded addition
glues the two halves back together exactly.
"""

from pathlib import Path

import numpy as np

from logimg import apply_expr
from logimg.raster import from_model, to_model, write_pnm
from logimg.synth import vignette

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

raster = vignette(128, 96)
f = to_model(raster)

# the photographic negative; applying it twice gives the input back
neg = apply_expr("<-> f", {"f": f})
again = apply_expr("<-> f", {"f": neg})
print("double negative returns the exact bytes:",
      np.array_equal(from_model(again).pixels, raster.pixels))

# split around mid-gray
pos = apply_expr("f_+", {"f": f})
negpart = apply_expr("f_-", {"f": f})
back = apply_expr("p <+> n", {"f": f, "p": pos, "n": negpart})
print("f_+ <+> f_- reassembles f exactly:", np.array_equal(back.data, f.data))

write_pnm(out / "vignette.pgm", raster)
write_pnm(out / "vignette_neg.pgm", from_model(neg))
write_pnm(out / "vignette_pos_part.pgm", from_model(pos))
write_pnm(out / "vignette_neg_part.pgm", from_model(negpart))
print("wrote 4 rasters to", out)
