"""Mask-aware geometric augmentation and segmentation evaluation toolkit."""

from .augment import (AugmentConfig, InterpConfig, SampledAugmentation,
                      apply_brightness, augment_dataset, augment_pair,
                      sample_params)
from .core import (BINARY_MAP, CategoricalMask, ImageBuffer, LabelMap,
                   TransformedMask, labels_to_pixels, pixels_to_labels)
from .maskfilter import FilterStats, global_filter
from .metrics import (ConfusionCounts, MetricReport, bf1, boundary,
                      compute_report, confusion, default_theta, dice, iou,
                      mean_bf_score)
from .metrics import accuracy as accuracy_score
from .resample import BoundaryPolicy, InterpMethod, sample
from .stats import RankRow, TTestResult, rank_scores, sum_ranks, ttest2
from .warp import (AffineTransform, TransformParams, compose, invert,
                   warp_image, warp_mask)

__version__ = "0.1.0"
