"""Segmentation quality metrics.

Per class:

* accuracy  = TP / (TP + FN)        (true-positive rate as printed)
* iou       = TP / (TP + FP + FN)
* dice      = 2 TP / (2 TP + FP + FN)
* bf1       = boundary F1 within a pixel-distance tolerance theta

mean_bf_score averages bf1 over all classes of the label map. A class
absent from the ground truth has undefined accuracy/iou/dice; those are
reported as NaN and excluded from report-level averages, with the excluded
count recorded.

Boundary definition: a pixel of a class is boundary iff at least one of its
4-neighbors inside the raster belongs to a different class; raster borders
alone never make a pixel boundary. The default tolerance is
round(0.0075 x image diagonal), i.e. 3 pixels at 256x256.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import BINARY_MAP, CategoricalMask, LabelMap


@dataclass(frozen=True)
class ClassCounts:
    tp: int
    fp: int
    fn: int
    tn: int


@dataclass(frozen=True)
class ConfusionCounts:
    """Per-class pixel counts keyed by label id."""

    per_class: dict[int, ClassCounts]
    total_pixels: int


@dataclass(frozen=True)
class MetricReport:
    accuracy: float
    iou: float
    dice: float
    mean_bf_score: float
    per_class_bf1: dict[int, float]
    class_count: int
    excluded_classes: int


def default_theta(width: int, height: int) -> int:
    """Boundary tolerance: round(0.0075 x diagonal), half away from zero."""
    return int(math.floor(0.0075 * math.hypot(width, height) + 0.5))


def _check_dims(pred: CategoricalMask, gt: CategoricalMask):
    if (pred.width, pred.height) != (gt.width, gt.height):
        raise ValueError(
            f"prediction {pred.width}x{pred.height} and ground truth "
            f"{gt.width}x{gt.height} differ"
        )


def confusion(pred: CategoricalMask, gt: CategoricalMask,
              label_map: LabelMap = BINARY_MAP) -> ConfusionCounts:
    _check_dims(pred, gt)
    p = np.asarray(pred.data, dtype=np.int64)
    g = np.asarray(gt.data, dtype=np.int64)
    total = p.size
    per_class = {}
    for label, pixel in label_map.entries:
        pp = p == pixel
        gg = g == pixel
        tp = int((pp & gg).sum())
        fp = int((pp & ~gg).sum())
        fn = int((~pp & gg).sum())
        per_class[label] = ClassCounts(tp=tp, fp=fp, fn=fn,
                                       tn=total - tp - fp - fn)
    return ConfusionCounts(per_class=per_class, total_pixels=total)


def accuracy(c: ConfusionCounts, label: int) -> float:
    k = c.per_class[label]
    if k.tp + k.fn == 0:
        raise ValueError(f"class {label} absent from ground truth; accuracy undefined")
    return k.tp / (k.tp + k.fn)


def iou(c: ConfusionCounts, label: int) -> float:
    k = c.per_class[label]
    if k.tp + k.fp + k.fn == 0:
        raise ValueError(f"class {label} absent from both masks; IoU undefined")
    return k.tp / (k.tp + k.fp + k.fn)


def dice(c: ConfusionCounts, label: int) -> float:
    k = c.per_class[label]
    if k.tp + k.fp + k.fn == 0:
        raise ValueError(f"class {label} absent from both masks; Dice undefined")
    return 2 * k.tp / (2 * k.tp + k.fp + k.fn)


def boundary_map(mask: CategoricalMask, pixel_value: int) -> np.ndarray:
    """Boolean raster marking boundary pixels of one class (4-neighborhood)."""
    m = np.asarray(mask.data) == pixel_value
    out = np.zeros_like(m)
    out[:-1] |= m[:-1] & (mask.data[:-1] != mask.data[1:])
    out[1:] |= m[1:] & (mask.data[1:] != mask.data[:-1])
    out[:, :-1] |= m[:, :-1] & (mask.data[:, :-1] != mask.data[:, 1:])
    out[:, 1:] |= m[:, 1:] & (mask.data[:, 1:] != mask.data[:, :-1])
    return out


def boundary(mask: CategoricalMask, pixel_value: int) -> set[tuple[int, int]]:
    """Boundary pixel coordinates of one class, as (x, y) pairs."""
    ys, xs = np.nonzero(boundary_map(mask, pixel_value))
    return {(int(x), int(y)) for x, y in zip(xs, ys)}


def _match_fraction(from_pts: np.ndarray, to_pts: np.ndarray, theta: float) -> float:
    """Fraction of from_pts within Euclidean distance theta of any to_pts."""
    if len(from_pts) == 0:
        return 1.0
    if len(to_pts) == 0:
        return 0.0
    matched = 0
    # chunked to bound the pairwise distance matrix
    for lo in range(0, len(from_pts), 1024):
        block = from_pts[lo:lo + 1024]
        d2 = ((block[:, None, :] - to_pts[None, :, :]) ** 2).sum(axis=2)
        matched += int((d2.min(axis=1) <= theta * theta).sum())
    return matched / len(from_pts)


def bf1(pred: CategoricalMask, gt: CategoricalMask,
        pixel_value: int, theta: float) -> float:
    """Boundary F1 for one class at tolerance theta.

    Vacuously 1.0 when both boundary sets are empty; 0.0 when precision and
    recall are both zero.
    """
    _check_dims(pred, gt)
    pb = np.argwhere(boundary_map(pred, pixel_value)).astype(np.float64)
    gb = np.argwhere(boundary_map(gt, pixel_value)).astype(np.float64)
    if len(pb) == 0 and len(gb) == 0:
        return 1.0
    precision = _match_fraction(pb, gb, theta)
    recall = _match_fraction(gb, pb, theta)
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def mean_bf_score(pred: CategoricalMask, gt: CategoricalMask,
                  label_map: LabelMap = BINARY_MAP, theta: float | None = None) -> float:
    """Mean of per-class boundary F1 over every class of the label map."""
    if theta is None:
        theta = default_theta(pred.width, pred.height)
    scores = [bf1(pred, gt, pixel, theta) for _, pixel in label_map.entries]
    return float(np.mean(scores))


def compute_report(pred: CategoricalMask, gt: CategoricalMask,
                   label_map: LabelMap = BINARY_MAP,
                   theta: float | None = None) -> MetricReport:
    """Full metric report; scalar scores are means over defined classes."""
    if theta is None:
        theta = default_theta(pred.width, pred.height)
    c = confusion(pred, gt, label_map)
    accs, ious, dices = [], [], []
    excluded = 0
    for label, _ in label_map.entries:
        k = c.per_class[label]
        if k.tp + k.fn == 0:
            excluded += 1
            continue
        accs.append(accuracy(c, label))
        ious.append(iou(c, label))
        dices.append(dice(c, label))
    if not accs:
        raise ValueError("no class present in ground truth")
    per_class_bf1 = {label: bf1(pred, gt, pixel, theta)
                     for label, pixel in label_map.entries}
    return MetricReport(
        accuracy=float(np.mean(accs)),
        iou=float(np.mean(ious)),
        dice=float(np.mean(dices)),
        mean_bf_score=float(np.mean(list(per_class_bf1.values()))),
        per_class_bf1=per_class_bf1,
        class_count=len(label_map.entries),
        excluded_classes=excluded,
    )
