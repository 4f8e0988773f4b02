"""Scalar algebra on the open gray-level interval (-1, 1).

Gray levels live strictly inside (-1, 1).  The map ``phi = arctanh``
carries the interval one-to-one onto the real line and turns the bounded
operations below into ordinary arithmetic there: bounded addition becomes
real addition, bounded scaling becomes real scaling.  That makes the
interval a genuine vector space with an inner product ``gdot`` and norm
``gnorm``, while every result stays representable as a gray level.

All functions broadcast like numpy ufuncs: they accept floats or arrays
and return the matching shape.  Results of the composing operations are
clamped to the nearest float64 values strictly inside the interval, so
saturation can never produce a sample equal to -1 or 1.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "GRAY_MAX",
    "as_gray",
    "clamp",
    "phi",
    "phi_inv",
    "gadd",
    "gsub",
    "gneg",
    "gscale",
    "gdot",
    "gnorm",
]

#: Largest float64 strictly below 1.  Valid gray levels satisfy
#: ``-GRAY_MAX <= v <= GRAY_MAX``.
GRAY_MAX = float(np.nextafter(1.0, 0.0))


def as_gray(value):
    """Validate a scalar gray level, returning it as a float.

    Raises ValueError for non-finite values or values outside (-1, 1).
    """
    v = float(value)
    if not np.isfinite(v) or not -1.0 < v < 1.0:
        raise ValueError(f"gray level must lie strictly inside (-1, 1), got {value!r}")
    return v


def clamp(v):
    """Clamp into [-GRAY_MAX, GRAY_MAX], the representable open interval."""
    return np.clip(v, -GRAY_MAX, GRAY_MAX)


def phi(v):
    """Map gray levels onto the real line (arctanh).

    Parameters
    ----------
    v : float or ndarray
        Gray levels strictly inside (-1, 1).

    Returns
    -------
    float or ndarray
        ``arctanh(v)``, computed as ``(log1p(v) - log1p(-v)) / 2`` so both
        endpoints stay accurate.  Finite for every representable input;
        the magnitude never exceeds ``arctanh(GRAY_MAX)`` (about 18.715).
    """
    return 0.5 * (np.log1p(v) - np.log1p(-v))


def phi_inv(x):
    """Inverse of :func:`phi`: tanh followed by the interval clamp.

    Accepts any real (or infinite) input; saturating arguments land on
    ``+/-GRAY_MAX`` rather than the excluded endpoints.
    """
    return clamp(np.tanh(x))


def gadd(v1, v2):
    """Bounded addition: ``(v1 + v2) / (1 + v1*v2)``.

    Commutative, with neutral element 0 and inverse :func:`gneg`.  The
    denominator is bounded away from zero for valid inputs, and the clamp
    keeps results strictly inside the interval even when rounding lands
    the quotient on 1.
    """
    return clamp((v1 + v2) / (1.0 + v1 * v2))


def gsub(v1, v2):
    """Bounded subtraction: ``(v1 - v2) / (1 - v1*v2)``.

    Equal to ``gadd(v1, gneg(v2))``; antisymmetric under swapping its
    operands.
    """
    return clamp((v1 - v2) / (1.0 - v1 * v2))


def gneg(v):
    """Bounded negation, the additive inverse: plain sign flip."""
    return np.negative(v)


def gscale(lam, v):
    """Scalar multiplication by any real factor.

    Parameters
    ----------
    lam : float or ndarray
        Real scale factor (finite).
    v : float or ndarray
        Gray levels.

    Returns
    -------
    float or ndarray
        ``phi_inv(lam * phi(v))``.  Scaling by 2 agrees with
        ``gadd(v, v)``, scaling by 1/2 splits ``v`` additively in half.

    Notes
    -----
    Factors 1 and -1 return ``v`` and ``gneg(v)`` bitwise: routing them
    through tanh/arctanh would perturb the identity by an ulp or two,
    and downstream code (distance-1 contrast in particular) relies on
    the exact identities.
    """
    if np.ndim(lam) == 0:
        lam = float(lam)
        if lam == 1.0:
            return np.positive(v)
        if lam == -1.0:
            return np.negative(v)
        return phi_inv(lam * phi(v))
    scaled = phi_inv(lam * phi(v))
    scaled = np.where(lam == 1.0, np.positive(v), scaled)
    scaled = np.where(lam == -1.0, np.negative(v), scaled)
    return scaled


def gdot(v1, v2):
    """Inner product of two gray levels: ``phi(v1) * phi(v2)``."""
    return phi(v1) * phi(v2)


def gnorm(v):
    """Norm of a gray level: ``|phi(v)|``, i.e. sqrt(gdot(v, v))."""
    return np.abs(phi(v))
