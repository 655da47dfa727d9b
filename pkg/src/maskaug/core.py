"""Fundamental raster types and the label <-> pixel-value mapping.

Conventions used throughout the package:

* rasters are row-major with origin at the top-left, x rightward, y downward;
* stored pixel values are 8-bit unsigned integers in [0, 255];
* interpolation arithmetic happens in floating point and is converted back
  to uint8 at store time (see ``maskaug.resample.quantize``).

All types are immutable value objects after construction and safe to share
between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _freeze(arr: np.ndarray, dtype=np.uint8) -> np.ndarray:
    # always copy so freezing never flips the caller's array to read-only
    out = np.array(arr, dtype=dtype, order="C", copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class LabelMap:
    """Ordered (label-id, pixel-value) pairs.

    The default is the binary map: background -> 0, foreground -> 255.
    """

    entries: tuple[tuple[int, int], ...] = ((0, 0), (1, 255))

    def __post_init__(self):
        labels = [l for l, _ in self.entries]
        pixels = [p for _, p in self.entries]
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate label ids in LabelMap")
        if len(set(pixels)) != len(pixels):
            raise ValueError("duplicate pixel values in LabelMap")
        for p in pixels:
            if not 0 <= p <= 255:
                raise ValueError(f"pixel value {p} outside [0, 255]")

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.entries)

    @property
    def pixel_values(self) -> tuple[int, ...]:
        return tuple(p for _, p in self.entries)

    def pixel_for(self, label: int) -> int:
        for l, p in self.entries:
            if l == label:
                return p
        raise KeyError(f"unknown label {label}")

    def label_for(self, pixel: int) -> int:
        for l, p in self.entries:
            if p == pixel:
                return l
        raise KeyError(f"unmapped value {pixel}")


BINARY_MAP = LabelMap()


@dataclass(frozen=True)
class ImageBuffer:
    """Intensity raster with 1 or 3 channels, shape (height, width, channels)."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim == 2:
            arr = arr[:, :, None]
        if arr.ndim != 3 or arr.shape[2] not in (1, 3):
            raise ValueError(f"expected (H, W, 1|3) array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("image values must lie in [0, 255]")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def channels(self) -> int:
        return self.data.shape[2]


@dataclass(frozen=True)
class CategoricalMask:
    """Single-channel raster holding only class pixel values ({0, 255} binary)."""

    data: np.ndarray
    label_map: LabelMap = field(default=BINARY_MAP, compare=False)

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise ValueError(f"expected (H, W) array, got shape {arr.shape}")
        allowed = np.array(self.label_map.pixel_values, dtype=np.int64)
        if arr.size:
            bad = ~np.isin(arr, allowed)
            if bad.any():
                ys, xs = np.nonzero(bad)
                v = int(arr[ys[0], xs[0]])
                raise ValueError(
                    f"unmapped value {v} at (x={xs[0]}, y={ys[0]}) in mask"
                )
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class TransformedMask:
    """Warped mask before filtering; values may be any integer in [0, 255]."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise ValueError(f"expected (H, W) array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("mask values must lie in [0, 255]")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


def labels_to_pixels(labels: np.ndarray, label_map: LabelMap = BINARY_MAP) -> CategoricalMask:
    """Replace each label id by its mapped pixel value.

    Raises ValueError naming the offending id and cell for unknown labels.
    """
    arr = np.asarray(labels, dtype=np.int64)
    if arr.ndim != 2:
        raise ValueError(f"expected (H, W) label grid, got shape {arr.shape}")
    out = np.zeros(arr.shape, dtype=np.uint8)
    known = np.zeros(arr.shape, dtype=bool)
    for label, pixel in label_map.entries:
        hit = arr == label
        out[hit] = pixel
        known |= hit
    if not known.all():
        ys, xs = np.nonzero(~known)
        raise ValueError(
            f"unknown label {int(arr[ys[0], xs[0]])} at (x={xs[0]}, y={ys[0]})"
        )
    return CategoricalMask(out, label_map)


def pixels_to_labels(mask: CategoricalMask, label_map: LabelMap = BINARY_MAP) -> np.ndarray:
    """Exact inverse of labels_to_pixels; round trip is the identity."""
    arr = np.asarray(mask.data, dtype=np.int64)
    out = np.zeros(arr.shape, dtype=np.int64)
    known = np.zeros(arr.shape, dtype=bool)
    for label, pixel in label_map.entries:
        hit = arr == pixel
        out[hit] = label
        known |= hit
    if not known.all():
        ys, xs = np.nonzero(~known)
        raise ValueError(
            f"unmapped value {int(arr[ys[0], xs[0]])} at (x={xs[0]}, y={ys[0]})"
        )
    return out
