import numpy as np
import pytest

from maskaug.core import CategoricalMask, ImageBuffer


def disk_mask(size=64, radius=None, center=None):
    r = radius if radius is not None else size // 3
    cx, cy = center if center is not None else ((size - 1) / 2, (size - 1) / 2)
    yy, xx = np.mgrid[:size, :size]
    return CategoricalMask(
        np.where((xx - cx) ** 2 + (yy - cy) ** 2 <= r * r, 255, 0).astype(np.uint8))


def checkerboard_mask(size=64, cell=8):
    yy, xx = np.mgrid[:size, :size]
    return CategoricalMask(
        (((xx // cell + yy // cell) % 2) * 255).astype(np.uint8))


def blob_mask(size=64, seed=0, n_blobs=4):
    rng = np.random.default_rng(seed)
    out = np.zeros((size, size), dtype=np.uint8)
    yy, xx = np.mgrid[:size, :size]
    for _ in range(n_blobs):
        cx, cy = rng.uniform(0, size, 2)
        r = rng.uniform(size / 12, size / 4)
        out[(xx - cx) ** 2 + (yy - cy) ** 2 <= r * r] = 255
    return CategoricalMask(out)


def const_mask(size=64, value=0):
    return CategoricalMask(np.full((size, size), value, dtype=np.uint8))


def random_image(height, width, channels=1, seed=0):
    rng = np.random.default_rng(seed)
    return ImageBuffer(rng.integers(0, 256, (height, width, channels),
                                    dtype=np.uint8))


def random_binary_mask(height, width, seed=0, p=0.5):
    rng = np.random.default_rng(seed)
    return CategoricalMask(
        (rng.random((height, width)) < p).astype(np.uint8) * 255)


@pytest.fixture
def synthetic_masks():
    return [disk_mask(), checkerboard_mask(), blob_mask(seed=3),
            const_mask(value=0), const_mask(value=255)]
