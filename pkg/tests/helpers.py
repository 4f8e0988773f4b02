"""Shared oracles and samplers.

Every oracle recomputes its target through a different formula than the
implementation uses (phi-domain forms against rational forms, explicit
loops against vectorized kernels), so agreement is evidence rather than
tautology.
"""

import math

import numpy as np

GRAY_MAX = float(np.nextafter(1.0, 0.0))
# Largest phi value any float64 gray level can represent.  Comparisons
# whose ideal phi target exceeds this are measuring saturation, not
# arithmetic accuracy.
PHI_REP = math.atanh(GRAY_MAX)
PHI_SAFE = 18.0


def oracle_gadd(v1, v2):
    """Bounded addition through the phi-domain form."""
    return np.tanh(np.arctanh(v1) + np.arctanh(v2))


def oracle_gsub(v1, v2):
    return np.tanh(np.arctanh(v1) - np.arctanh(v2))


def oracle_gscale_power(lam, v):
    """Bounded scaling through the direct power form."""
    a = np.power(1.0 + v, lam)
    b = np.power(1.0 - v, lam)
    return (a - b) / (a + b)


def phi_step(v):
    """phi-image of one float64 grid step at gray value v.

    Adjacent representable values around v sit about spacing(v) apart,
    which phi stretches by 1/(1 - v^2).  No float64 pipeline can pin a
    phi target more finely than this, so law comparisons get this much
    slack per bounded-grid landing.
    """
    v = np.abs(np.asarray(v, dtype=float))
    return np.spacing(v) / (1.0 - v * v)


def grid_tolerance(*stages, base=1e-12, steps=8):
    """Tolerance for a phi-domain comparison.

    ``stages`` are (amplification, value_array) pairs: every value that
    lands on the bounded grid during either pipeline, scaled by how much
    the law amplifies an error at that point (|lambda| for scaled
    inputs, 1 elsewhere).
    """
    tol = base
    for amp, values in stages:
        tol = tol + steps * np.asarray(amp) * phi_step(values)
    return tol


def rand_gray(rng, n, max_abs=1.0 - 2.0 ** -20):
    """Half uniform in value, half uniform in phi (heavy near the ends)."""
    half = n // 2
    u = rng.uniform(-max_abs, max_abs, half)
    t = np.tanh(rng.uniform(-math.atanh(max_abs), math.atanh(max_abs), n - half))
    out = np.concatenate([u, np.clip(t, -max_abs, max_abs)])
    rng.shuffle(out)
    return out


def pixel_contrast_oracle(f, x, y, connectivity=4):
    """Brute-force phi-domain mean of the neighbor absolute contrasts."""
    from logimg import abs_contrast

    offsets = [(0, 1), (0, -1), (1, 0), (-1, 0)]
    if connectivity == 8:
        offsets += [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    phis = []
    for dx, dy in offsets:
        nx, ny = x + dx, y + dy
        if 0 <= nx < f.width and 0 <= ny < f.height:
            phis.append(math.atanh(abs_contrast(f, (x, y), (nx, ny))))
    return math.tanh(math.fsum(phis) / len(phis))


def blur_plane_oracle(plane, sigma):
    """Separable Gaussian with replicated edges, written as plain loops."""
    radius = math.ceil(3 * sigma)
    taps = np.exp(-(np.arange(-radius, radius + 1) ** 2) / (2.0 * sigma * sigma))
    taps = taps / taps.sum()
    h, w = plane.shape
    tmp = np.empty_like(plane)
    for y in range(h):
        for x in range(w):
            acc = 0.0
            for k in range(-radius, radius + 1):
                yy = min(max(y + k, 0), h - 1)
                acc += taps[k + radius] * plane[yy, x]
            tmp[y, x] = acc
    out = np.empty_like(plane)
    for y in range(h):
        for x in range(w):
            acc = 0.0
            for k in range(-radius, radius + 1):
                xx = min(max(x + k, 0), w - 1)
                acc += taps[k + radius] * tmp[y, xx]
            out[y, x] = acc
    return out
