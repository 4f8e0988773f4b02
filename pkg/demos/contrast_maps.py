"""
Contrast between neighbors, rendered as edge maps
=================================================

The contrast between two pixels is a bounded, distance-weighted
difference: signed for ordered pairs, absolute for edges, and a
per-pixel mean over the neighborhood for a full contour image.
"""

from pathlib import Path

import numpy as np

from logimg import abs_contrast, contrast_map, pixel_contrast, rel_contrast
from logimg.raster import from_model, to_model, write_pnm
from logimg.synth import checkerboard, gray_step

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# two flat bands: every edge sits on one horizontal line
step = to_model(gray_step(128, 96, low=64, high=192))
print("signed contrast across the band edge:",
      round(rel_contrast(step, (10, 47), (10, 48)), 6))
print("same pair, magnitude:",
      round(abs_contrast(step, (10, 47), (10, 48)), 6))
print("pixel contrast on the edge:", round(pixel_contrast(step, (10, 48)), 6))
print("pixel contrast inside a band:", round(pixel_contrast(step, (10, 20)), 6))

# direction matters: the horizontal map misses horizontal band edges
h = contrast_map(step, "horizontal")
v = contrast_map(step, "vertical")
print("horizontal map peak:", float(np.abs(h.data).max()))
print("vertical map peak:  ", float(np.abs(v.data).max()))

# a checkerboard lights up everywhere; save magnitude renderings
board = to_model(checkerboard(128, 96, tile=8))
for mode in ("horizontal", "vertical", "pixel"):
    cmap = contrast_map(board, mode)
    codes = np.clip(np.abs(cmap.data) * 255.0 + 0.5, 0, 255).astype(np.uint8)
    from logimg.raster import RasterBuffer
    write_pnm(out / f"board_{mode}.pgm", RasterBuffer(codes))

# the 8-neighborhood adds diagonal edges into the mean
four = contrast_map(board, "pixel", connectivity=4)
eight = contrast_map(board, "pixel", connectivity=8)
print("pixel map mean, 4 vs 8 neighbors:",
      round(float(four.data.mean()), 6), round(float(eight.data.mean()), 6))
print("wrote 3 rasters to", out)
