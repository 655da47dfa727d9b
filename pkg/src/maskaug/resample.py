"""Point sampling of rasters at fractional coordinates.

Three interpolation methods are supported: nearest neighbor (NEA), bilinear
(BIL) and bicubic (BIC, Keys kernel with a = -0.5).

Coordinate convention: pixel centers sit at integer coordinates
0..width-1 / 0..height-1. A mapped point outside
[0, width-1] x [0, height-1] yields the boundary fill value for every
channel; kernel taps of in-bounds points that fall off the raster use edge
replication, so the fill value never bleeds into in-frame results.

Interpolated values are rounded half-away-from-zero and clamped to
[0, 255] at store time. Coordinates within 1e-9 of an integer are snapped
to that integer before bounds testing and kernel evaluation, so
grid-aligned transforms are exact despite floating-point noise in the
inverse map.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum

import numpy as np

try:
    if os.environ.get("MASKAUG_NO_NUMBA"):
        raise ImportError
    from . import _kernels
except ImportError:  # pragma: no cover - exercised via MASKAUG_NO_NUMBA
    _kernels = None

COORD_SNAP_EPS = 1e-9

# Keys bicubic parameter; the common Catmull-Rom-like default.
KEYS_A = -0.5


class InterpMethod(Enum):
    NEAREST = "NEA"
    BILINEAR = "BIL"
    BICUBIC = "BIC"


@dataclass(frozen=True)
class BoundaryPolicy:
    """Fill value for output pixels whose mapped point falls off the raster."""

    fill_value: int = 0

    def __post_init__(self):
        if not 0 <= self.fill_value <= 255:
            raise ValueError(f"fill value {self.fill_value} outside [0, 255]")


def round_half_away(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer, halves away from zero."""
    x = np.asarray(x, dtype=np.float64)
    return np.where(x >= 0, np.floor(x + 0.5), np.ceil(x - 0.5))


def quantize(x: np.ndarray) -> np.ndarray:
    """Float intensities -> uint8: round half-away-from-zero, clamp to [0, 255]."""
    return np.clip(round_half_away(x), 0, 255).astype(np.uint8)


def snap_coords(c: np.ndarray) -> np.ndarray:
    """Snap coordinates within COORD_SNAP_EPS of an integer to that integer."""
    c = np.asarray(c, dtype=np.float64)
    nearest = np.round(c)
    return np.where(np.abs(c - nearest) <= COORD_SNAP_EPS, nearest, c)


def keys_weights(t: np.ndarray) -> np.ndarray:
    """Keys cubic kernel, a = -0.5, evaluated at distances |t|."""
    t = np.abs(np.asarray(t, dtype=np.float64))
    a = KEYS_A
    near = (a + 2.0) * t**3 - (a + 3.0) * t**2 + 1.0
    far = a * (t**3 - 5.0 * t**2 + 8.0 * t - 4.0)
    return np.where(t <= 1.0, near, np.where(t < 2.0, far, 0.0))


def _planes(raster) -> np.ndarray:
    """Any raster type or array -> float64 (H, W, C) view."""
    data = getattr(raster, "data", raster)
    arr = np.asarray(data, dtype=np.float64)
    if arr.ndim == 2:
        arr = arr[:, :, None]
    if arr.ndim != 3:
        raise ValueError(f"expected 2-D or 3-D raster, got shape {arr.shape}")
    return arr


def sample_grid(raster, us: np.ndarray, vs: np.ndarray,
                method: InterpMethod, policy: BoundaryPolicy) -> np.ndarray:
    """Sample a raster at arrays of fractional (u, v) points.

    Returns a uint8 array of shape us.shape + (channels,).
    """
    src = _planes(raster)
    h, w = src.shape[:2]
    if h == 0 or w == 0:
        raise ValueError("cannot sample an empty raster")
    us = snap_coords(us)
    vs = snap_coords(vs)
    if not (np.isfinite(us).all() and np.isfinite(vs).all()):
        raise ValueError("non-finite sample coordinate")

    if _kernels is not None:
        codes = {InterpMethod.NEAREST: _kernels.NEAREST,
                 InterpMethod.BILINEAR: _kernels.BILINEAR,
                 InterpMethod.BICUBIC: _kernels.BICUBIC}
        if method not in codes:
            raise ValueError(f"unknown interpolation method {method!r}")
        flat_u = np.ascontiguousarray(us.ravel())
        flat_v = np.ascontiguousarray(vs.ravel())
        out = np.empty((flat_u.size, src.shape[2]), dtype=np.uint8)
        _kernels.sample_kernel(np.ascontiguousarray(src), flat_u, flat_v,
                               codes[method], float(policy.fill_value), out)
        return out.reshape(us.shape + (src.shape[2],))

    oob = (us < 0) | (us > w - 1) | (vs < 0) | (vs > h - 1)

    if method is InterpMethod.NEAREST:
        xi = round_half_away(us).astype(np.int64)
        yi = round_half_away(vs).astype(np.int64)
        xi = np.clip(xi, 0, w - 1)
        yi = np.clip(yi, 0, h - 1)
        raw = src[yi, xi]
    elif method is InterpMethod.BILINEAR:
        x0 = np.clip(np.floor(us).astype(np.int64), 0, w - 1)
        y0 = np.clip(np.floor(vs).astype(np.int64), 0, h - 1)
        x1 = np.minimum(x0 + 1, w - 1)
        y1 = np.minimum(y0 + 1, h - 1)
        fx = (us - x0)[..., None]
        fy = (vs - y0)[..., None]
        top = src[y0, x0] * (1 - fx) + src[y0, x1] * fx
        bot = src[y1, x0] * (1 - fx) + src[y1, x1] * fx
        raw = top * (1 - fy) + bot * fy
    elif method is InterpMethod.BICUBIC:
        xb = np.floor(us).astype(np.int64)
        yb = np.floor(vs).astype(np.int64)
        fx = us - xb
        fy = vs - yb
        raw = np.zeros(us.shape + (src.shape[2],), dtype=np.float64)
        wx = [keys_weights(fx - (k - 1)) for k in range(4)]
        wy = [keys_weights(fy - (k - 1)) for k in range(4)]
        for ky in range(4):
            yi = np.clip(yb + ky - 1, 0, h - 1)
            row = np.zeros_like(raw)
            for kx in range(4):
                xi = np.clip(xb + kx - 1, 0, w - 1)
                row += wx[kx][..., None] * src[yi, xi]
            raw += wy[ky][..., None] * row
    else:
        raise ValueError(f"unknown interpolation method {method!r}")

    raw = np.where(oob[..., None], float(policy.fill_value), raw)
    return quantize(raw)


def sample(raster, u: float, v: float,
           method: InterpMethod, policy: BoundaryPolicy) -> tuple[int, ...]:
    """Sample one fractional point; returns one intensity per channel."""
    if not (np.isfinite(u) and np.isfinite(v)):
        raise ValueError(f"non-finite sample coordinate ({u}, {v})")
    out = sample_grid(raster, np.asarray([float(u)]), np.asarray([float(v)]),
                      method, policy)
    return tuple(int(c) for c in out[0])
