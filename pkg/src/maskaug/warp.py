"""Affine transform construction and the inverse-mapping warp engine.

The composed transform maps source coordinates to destination coordinates:

    T = translate(tx, ty) . recenter . shear_v . shear_h . rotate . scale . center_to_origin

i.e. scale first, then rotation, then horizontal shear, then vertical shear,
all pivoted at the image center ((w-1)/2, (h-1)/2), then translation.
Warping inverse-maps every output pixel through T^-1 and samples the source;
the output view equals the input grid (no auto-expanding canvas).

The mask path (warp_mask) deliberately accepts any interpolation method, so
its output may contain intermediate values that must go through the global
filter before it is a valid categorical mask again.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import CategoricalMask, ImageBuffer, TransformedMask
from .resample import BoundaryPolicy, InterpMethod, sample_grid, snap_coords


@dataclass(frozen=True)
class TransformParams:
    rotation: float = 0.0    # degrees
    shear_h: float = 0.0     # degrees
    shear_v: float = 0.0     # degrees
    tx: float = 0.0          # pixels
    ty: float = 0.0          # pixels
    scale: float = 1.0       # unitless, > 0

    def __post_init__(self):
        vals = (self.rotation, self.shear_h, self.shear_v,
                self.tx, self.ty, self.scale)
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("transform parameters must be finite")
        if self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")


@dataclass(frozen=True)
class AffineTransform:
    """3x3 homogeneous matrix with bottom row (0, 0, 1)."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=np.float64)
        if m.shape != (3, 3):
            raise ValueError(f"expected 3x3 matrix, got shape {m.shape}")
        if not np.allclose(m[2], (0.0, 0.0, 1.0)):
            raise ValueError("bottom row must be (0, 0, 1)")
        if abs(np.linalg.det(m[:2, :2])) < 1e-12:
            raise ValueError("affine transform is singular")
        m = m.copy()
        m[2] = (0.0, 0.0, 1.0)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls) -> "AffineTransform":
        return cls(np.eye(3))

    @classmethod
    def translation(cls, tx: float, ty: float) -> "AffineTransform":
        m = np.eye(3)
        m[0, 2] = tx
        m[1, 2] = ty
        return cls(m)

    @classmethod
    def scaling(cls, sx: float, sy: float | None = None) -> "AffineTransform":
        sy = sx if sy is None else sy
        return cls(np.diag([sx, sy, 1.0]))

    @classmethod
    def rotation(cls, degrees: float) -> "AffineTransform":
        r = math.radians(degrees)
        c, s = math.cos(r), math.sin(r)
        return cls(np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]))

    @classmethod
    def shear_h(cls, degrees: float) -> "AffineTransform":
        return cls(np.array([[1.0, math.tan(math.radians(degrees)), 0.0],
                             [0.0, 1.0, 0.0],
                             [0.0, 0.0, 1.0]]))

    @classmethod
    def shear_v(cls, degrees: float) -> "AffineTransform":
        return cls(np.array([[1.0, 0.0, 0.0],
                             [math.tan(math.radians(degrees)), 1.0, 0.0],
                             [0.0, 0.0, 1.0]]))

    def __matmul__(self, other: "AffineTransform") -> "AffineTransform":
        return AffineTransform(self.matrix @ other.matrix)

    def apply(self, x, y):
        """Map point(s) (x, y) through the transform."""
        x = np.asarray(x, dtype=np.float64)
        y = np.asarray(y, dtype=np.float64)
        m = self.matrix
        return (m[0, 0] * x + m[0, 1] * y + m[0, 2],
                m[1, 0] * x + m[1, 1] * y + m[1, 2])


def compose(params: TransformParams, center: tuple[float, float]) -> AffineTransform:
    """Build the full source->destination transform about the given pivot."""
    cx, cy = center
    t = (AffineTransform.translation(params.tx, params.ty)
         @ AffineTransform.translation(cx, cy)
         @ AffineTransform.shear_v(params.shear_v)
         @ AffineTransform.shear_h(params.shear_h)
         @ AffineTransform.rotation(params.rotation)
         @ AffineTransform.scaling(params.scale)
         @ AffineTransform.translation(-cx, -cy))
    # scale > 0 guarantees invertibility; the constructor double-checks.
    return t


def invert(t: AffineTransform) -> AffineTransform:
    return AffineTransform(np.linalg.inv(t.matrix))


def _warp_planes(data: np.ndarray, t: AffineTransform,
                 method: InterpMethod, policy: BoundaryPolicy,
                 out_shape: tuple[int, int] | None = None) -> np.ndarray:
    h, w = data.shape[:2]
    if h == 0 or w == 0:
        raise ValueError("cannot warp an empty raster")
    oh, ow = out_shape if out_shape is not None else (h, w)
    inv = invert(t)
    xs, ys = np.meshgrid(np.arange(ow, dtype=np.float64),
                         np.arange(oh, dtype=np.float64))
    us, vs = inv.apply(xs, ys)
    us = snap_coords(us)
    vs = snap_coords(vs)
    out = sample_grid(data, us, vs, method, policy)
    if data.ndim == 2:
        return out[:, :, 0]
    return out


def warp_image(img: ImageBuffer, t: AffineTransform,
               method: InterpMethod, policy: BoundaryPolicy = BoundaryPolicy()) -> ImageBuffer:
    """Inverse-mapping warp of an intensity image; channels are independent."""
    return ImageBuffer(_warp_planes(img.data, t, method, policy))


def warp_mask(mask: CategoricalMask, t: AffineTransform,
              method: InterpMethod, policy: BoundaryPolicy = BoundaryPolicy()) -> TransformedMask:
    """Warp a categorical mask with a caller-chosen interpolation method.

    With Nearest the result stays within the class value set (plus the fill
    value); with Bilinear/Bicubic it may contain any value in [0, 255] and
    needs filtering before it is categorical again.
    """
    return TransformedMask(_warp_planes(mask.data, t, method, policy))
