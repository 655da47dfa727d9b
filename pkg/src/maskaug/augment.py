"""Paired image/mask augmentation pipeline.

One set of geometric parameters is sampled per (pair, augmentation) and
applied identically to image and mask; brightness applies to the image only;
the warped mask is always passed through the global filter so outputs stay
binary for every interpolation configuration.

Interpolation configurations are named IMG_MASK with the fixed abbreviations
NEA/BIL/BIC: the image method comes first, the mask method second
(NEA_BIC = nearest for images, bicubic for masks).

Parameter draws are a pure function of (seed, pair_index, aug_index) via
counter-based RNG streams, so a corpus is reproducible for any worker count
and call order.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from .core import CategoricalMask, ImageBuffer
from .maskfilter import global_filter
from .resample import BoundaryPolicy, InterpMethod, quantize
from .warp import TransformParams, compose, warp_image, warp_mask

_ABBREV = {m.value: m for m in InterpMethod}


@dataclass(frozen=True)
class InterpConfig:
    """Interpolation methods for the image path and the mask path."""

    image_method: InterpMethod = InterpMethod.NEAREST
    mask_method: InterpMethod = InterpMethod.NEAREST

    @property
    def name(self) -> str:
        return f"{self.image_method.value}_{self.mask_method.value}"

    @classmethod
    def from_name(cls, name: str) -> "InterpConfig":
        try:
            img, mask = name.strip().upper().split("_")
            return cls(_ABBREV[img], _ABBREV[mask])
        except (ValueError, KeyError):
            raise ValueError(
                f"bad interpolation config name {name!r}; expected e.g. NEA_NEA, BIC_BIC"
            ) from None


@dataclass(frozen=True)
class AugmentConfig:
    x_translation_range: tuple[float, float] = (-10.0, 10.0)
    y_translation_range: tuple[float, float] = (-10.0, 10.0)
    shear_h_range: tuple[float, float] = (-15.0, 15.0)
    shear_v_range: tuple[float, float] = (-15.0, 15.0)
    rotation_range: tuple[float, float] = (-45.0, 45.0)
    scale_range: tuple[float, float] = (0.8, 1.2)
    brightness_set: tuple[float, ...] = (0.9, 0.95, 1.0, 1.05, 1.1)
    interp: InterpConfig = field(default_factory=InterpConfig)
    seed: int = 0
    augmentations_per_pair: int = 10
    fill_value: int = 0

    def __post_init__(self):
        for name in ("x_translation_range", "y_translation_range",
                     "shear_h_range", "shear_v_range", "rotation_range",
                     "scale_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name}: lo {lo} > hi {hi}")
        if self.scale_range[0] <= 0:
            raise ValueError("scale range must be strictly positive")
        if not self.brightness_set or min(self.brightness_set) <= 0:
            raise ValueError("brightness factors must be strictly positive")
        if self.augmentations_per_pair < 0:
            raise ValueError("augmentations_per_pair must be >= 0")

    # JSON keys use the hyphenated field names; interp accepts either a
    # plain config-name string or an {image-method, mask-method} object.
    _JSON_KEYS = {
        "x_translation_range": "x-translation-range",
        "y_translation_range": "y-translation-range",
        "shear_h_range": "shear-h-range",
        "shear_v_range": "shear-v-range",
        "rotation_range": "rotation-range",
        "scale_range": "scale-range",
        "brightness_set": "brightness-set",
        "seed": "seed",
        "augmentations_per_pair": "augmentations-per-pair",
        "fill_value": "fill-value",
    }

    def to_json(self) -> str:
        doc = {}
        for attr, key in self._JSON_KEYS.items():
            val = getattr(self, attr)
            doc[key] = list(val) if isinstance(val, tuple) else val
        doc["interp"] = {
            "image-method": self.interp.image_method.value,
            "mask-method": self.interp.mask_method.value,
            "name": self.interp.name,
        }
        return json.dumps(doc, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "AugmentConfig":
        doc = json.loads(text)
        kwargs = {}
        for attr, key in cls._JSON_KEYS.items():
            if key in doc:
                val = doc[key]
                kwargs[attr] = tuple(val) if isinstance(val, list) else val
        interp = doc.get("interp")
        if interp is not None:
            if isinstance(interp, str):
                kwargs["interp"] = InterpConfig.from_name(interp)
            else:
                kwargs["interp"] = InterpConfig(
                    _ABBREV[interp["image-method"]],
                    _ABBREV[interp["mask-method"]],
                )
        return cls(**kwargs)


@dataclass(frozen=True)
class SampledAugmentation:
    params: TransformParams
    brightness_factor: float


def sample_params(config: AugmentConfig, pair_index: int, aug_index: int) -> SampledAugmentation:
    """Draw one augmentation; a pure function of (seed, pair_index, aug_index)."""
    ss = np.random.SeedSequence(entropy=config.seed,
                                spawn_key=(pair_index, aug_index))
    rng = np.random.default_rng(ss)
    rotation = rng.uniform(*config.rotation_range)
    shear_h = rng.uniform(*config.shear_h_range)
    shear_v = rng.uniform(*config.shear_v_range)
    tx = rng.uniform(*config.x_translation_range)
    ty = rng.uniform(*config.y_translation_range)
    scale = rng.uniform(*config.scale_range)
    brightness = config.brightness_set[rng.integers(len(config.brightness_set))]
    return SampledAugmentation(
        params=TransformParams(rotation=rotation, shear_h=shear_h,
                               shear_v=shear_v, tx=tx, ty=ty, scale=scale),
        brightness_factor=float(brightness),
    )


def apply_brightness(img: ImageBuffer, factor: float) -> ImageBuffer:
    """Scale intensities by a factor; round half-away-from-zero, clamp."""
    if factor <= 0:
        raise ValueError(f"brightness factor must be positive, got {factor}")
    if factor == 1.0:
        return img
    return ImageBuffer(quantize(img.data.astype(np.float64) * factor))


def augment_pair(img: ImageBuffer, mask: CategoricalMask,
                 s: SampledAugmentation, config: AugmentConfig) -> tuple[ImageBuffer, CategoricalMask]:
    """Apply one sampled augmentation to an image/mask pair."""
    if (img.width, img.height) != (mask.width, mask.height):
        raise ValueError(
            f"image {img.width}x{img.height} and mask {mask.width}x{mask.height} differ"
        )
    center = ((img.width - 1) / 2.0, (img.height - 1) / 2.0)
    t = compose(s.params, center)
    policy = BoundaryPolicy(config.fill_value)
    out_img = warp_image(img, t, config.interp.image_method, policy)
    out_img = apply_brightness(out_img, s.brightness_factor)
    warped = warp_mask(mask, t, config.interp.mask_method, policy)
    out_mask, _ = global_filter(warped)
    return out_img, out_mask


def augment_dataset(pairs, config: AugmentConfig, workers: int = 1):
    """Augment every pair; returns augmentations_per_pair outputs per input.

    Output order is (pair_index, aug_index) lexicographic for any worker
    count; results are bit-identical across reruns and worker counts.
    """
    pairs = list(pairs)
    jobs = [(pi, ai) for pi in range(len(pairs))
            for ai in range(config.augmentations_per_pair)]

    def run(job):
        pi, ai = job
        img, mask = pairs[pi]
        try:
            s = sample_params(config, pi, ai)
            return augment_pair(img, mask, s, config)
        except Exception as exc:
            raise RuntimeError(f"augmentation failed for pair {pi}: {exc}") from exc

    if workers <= 1:
        return [run(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, jobs))


def neutral_config(config: AugmentConfig) -> AugmentConfig:
    """Copy of a config with all ranges collapsed to the neutral transform."""
    return replace(config,
                   x_translation_range=(0.0, 0.0),
                   y_translation_range=(0.0, 0.0),
                   shear_h_range=(0.0, 0.0),
                   shear_v_range=(0.0, 0.0),
                   rotation_range=(0.0, 0.0),
                   scale_range=(1.0, 1.0),
                   brightness_set=(1.0,))
