"""Mean-based global filter turning a warped mask back into a binary mask.

The rules, applied per pixel in order of precedence:

1. values already equal to a class value (0 or 255) are kept;
2. values strictly above the global mean of the whole raster become 255;
3. everything else becomes 0.

The mean is computed once over the entire raster, fill regions included.
Rule 1 comes first; it only changes the outcome for the all-255 raster,
where the strict comparison of rule 2 would otherwise send everything to 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import CategoricalMask, TransformedMask


@dataclass(frozen=True)
class FilterStats:
    mu: float              # global mean of the pre-filter mask
    changed_count: int     # pixels altered by filtering


def global_filter(p: TransformedMask) -> tuple[CategoricalMask, FilterStats]:
    """Binarize a transformed mask by global mean thresholding."""
    arr = np.asarray(p.data, dtype=np.int64)
    if arr.size == 0:
        raise ValueError("cannot filter an empty mask")
    mu = float(arr.mean())
    keep = (arr == 0) | (arr == 255)
    out = np.where(keep, arr, np.where(arr > mu, 255, 0)).astype(np.uint8)
    changed = int((out != arr).sum())
    return CategoricalMask(out), FilterStats(mu=mu, changed_count=changed)
