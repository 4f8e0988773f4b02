"""
Removing a color cast with channel-wise arithmetic
==================================================

A color image is three gray planes, and every bounded operation acts
channel by channel.  Subtracting a constant color vector shifts the
channel balance, so a measured cast can be cancelled directly.
"""

from pathlib import Path

import numpy as np

from logimg import apply_expr
from logimg.raster import from_model, to_model, write_pnm
from logimg.synth import color_cast

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# a gradient pushed off neutral: too red, slightly short of green/blue
raster = color_cast(192, 128, bias=(40, -10, -25))
f = to_model(raster)
write_pnm(out / "cast.ppm", raster)


def channel_means(img):
    return img.data.reshape(-1, 3).mean(axis=0)


print("channel means before:", np.round(channel_means(f), 3))

# the cast vector: how far each channel mean sits from their average
means = channel_means(f)
cast = means - means.mean()
v = ",".join(f"{c:.4f}" for c in cast)

corrected = apply_expr("f <-> v", {"f": f, "v": tuple(cast)})
print("channel means after: ", np.round(channel_means(corrected), 3))
write_pnm(out / "cast_corrected.ppm", from_model(corrected))

# overcorrecting with a scale factor on the vector exaggerates the fix
strong = apply_expr("f <-> 1.5 <x> v", {"f": f, "v": tuple(cast)})
write_pnm(out / "cast_overcorrected.ppm", from_model(strong))

print("same correction from the command line:")
print(f"  logimg apply --expr 'f <-> v' --bind v={v} -i cast.ppm -o fixed.ppm")
