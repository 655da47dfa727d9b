"""Dataset ingestion: PNG loading, mask validation, resizing, splits.

Pairs are discovered by shared file stem between an images directory and a
masks directory. Masks whose values are not exactly the class pixel values
are passed through the global filter at load time and a warning is logged,
since real annotation exports often carry anti-aliased edges.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np
from PIL import Image

from .augment import InterpConfig
from .core import BINARY_MAP, CategoricalMask, ImageBuffer, LabelMap, TransformedMask
from .maskfilter import global_filter
from .resample import BoundaryPolicy
from .warp import AffineTransform, _warp_planes

logger = logging.getLogger(__name__)

SPLITS = ("train", "val", "test")
DEFAULT_FRACTIONS = (0.70, 0.15, 0.15)


@dataclass
class PairManifest:
    entries: list[tuple[str, str, str]]          # (pair_id, image_path, mask_path)
    assignment: dict[str, str] = field(default_factory=dict)   # pair_id -> split


def load_image(path) -> ImageBuffer:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"missing image file: {path}")
    with Image.open(path) as im:
        if im.mode not in ("L", "RGB"):
            im = im.convert("RGB" if im.mode in ("RGBA", "P", "CMYK") else "L")
        arr = np.asarray(im, dtype=np.uint8)
    return ImageBuffer(arr)


def load_mask(path, label_map: LabelMap = BINARY_MAP) -> CategoricalMask:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"missing mask file: {path}")
    with Image.open(path) as im:
        if im.mode != "L":
            im = im.convert("L")
        arr = np.asarray(im, dtype=np.uint8)
    allowed = np.array(label_map.pixel_values, dtype=np.uint8)
    if not np.isin(arr, allowed).all():
        n_bad = int((~np.isin(arr, allowed)).sum())
        logger.warning(
            "mask %s has %d value(s) outside the class set; applying global filter",
            path, n_bad,
        )
        filtered, _ = global_filter(TransformedMask(arr))
        return filtered
    return CategoricalMask(arr, label_map)


def load_pair(image_path, mask_path,
              label_map: LabelMap = BINARY_MAP) -> tuple[ImageBuffer, CategoricalMask]:
    img = load_image(image_path)
    mask = load_mask(mask_path, label_map)
    if (img.width, img.height) != (mask.width, mask.height):
        raise ValueError(
            f"image {img.width}x{img.height} ({image_path}) and mask "
            f"{mask.width}x{mask.height} ({mask_path}) differ in size"
        )
    return img, mask


def save_image(img: ImageBuffer, path):
    arr = img.data[:, :, 0] if img.channels == 1 else img.data
    Image.fromarray(arr).save(Path(path), format="PNG")


def save_mask(mask: CategoricalMask, path):
    Image.fromarray(np.asarray(mask.data)).save(Path(path), format="PNG")


def _scaling_to(src_w: int, src_h: int, dst_w: int, dst_h: int) -> AffineTransform:
    """Pure scaling that maps the source corner grid onto the target grid."""
    sx = (dst_w - 1) / (src_w - 1) if src_w > 1 else 1.0
    sy = (dst_h - 1) / (src_h - 1) if src_h > 1 else 1.0
    return AffineTransform.scaling(sx, sy)


def resize_pair(img: ImageBuffer, mask: CategoricalMask,
                target: tuple[int, int] = (256, 256),
                interp: InterpConfig = InterpConfig()) -> tuple[ImageBuffer, CategoricalMask]:
    """Resize both rasters to target (width, height) via a scaling warp."""
    tw, th = target
    if tw <= 0 or th <= 0:
        raise ValueError(f"target dimensions must be positive, got {target}")
    policy = BoundaryPolicy(0)
    t_img = _scaling_to(img.width, img.height, tw, th)
    out_img = ImageBuffer(_warp_planes(img.data, t_img, interp.image_method,
                                       policy, out_shape=(th, tw)))
    t_mask = _scaling_to(mask.width, mask.height, tw, th)
    warped = TransformedMask(_warp_planes(mask.data, t_mask, interp.mask_method,
                                          policy, out_shape=(th, tw)))
    out_mask, _ = global_filter(warped)
    return out_img, out_mask


def discover_pairs(images_dir, masks_dir) -> PairManifest:
    """Pair PNGs in two directories by shared file stem, sorted by stem."""
    images_dir, masks_dir = Path(images_dir), Path(masks_dir)
    images = {p.stem: p for p in sorted(images_dir.glob("*.png"))}
    masks = {p.stem: p for p in sorted(masks_dir.glob("*.png"))}
    missing = sorted(set(images) ^ set(masks))
    if missing:
        raise ValueError(f"unmatched file stems across directories: {missing}")
    if not images:
        raise ValueError(f"no PNG pairs found in {images_dir} / {masks_dir}")
    entries = [(stem, str(images[stem]), str(masks[stem]))
               for stem in sorted(images)]
    return PairManifest(entries=entries)


def split(manifest: PairManifest,
          fractions: tuple[float, float, float] = DEFAULT_FRACTIONS,
          seed: int = 0) -> PairManifest:
    """Assign train/val/test splits by deterministic seeded shuffle.

    Counts are round(f_train * n), round(f_val * n), remainder; rounding is
    half-up in exact rational arithmetic so e.g. n = 55 gives (39, 8, 8).
    """
    n = len(manifest.entries)
    if n == 0:
        raise ValueError("cannot split an empty manifest")
    fr = [Fraction(str(f)) for f in fractions]
    if sum(fr) != 1:
        raise ValueError(f"split fractions must sum to 1, got {fractions}")
    n_train = int(fr[0] * n + Fraction(1, 2))
    n_val = int(fr[1] * n + Fraction(1, 2))
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    assignment = {}
    for pos, idx in enumerate(order):
        pair_id = manifest.entries[int(idx)][0]
        if pos < n_train:
            assignment[pair_id] = "train"
        elif pos < n_train + n_val:
            assignment[pair_id] = "val"
        else:
            assignment[pair_id] = "test"
    return PairManifest(entries=list(manifest.entries), assignment=assignment)


def write_manifest(manifest: PairManifest, path):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["pair-id", "image-path", "mask-path", "split"])
        for pair_id, img_path, mask_path in manifest.entries:
            writer.writerow([pair_id, img_path, mask_path,
                             manifest.assignment.get(pair_id, "")])


def read_manifest(path) -> PairManifest:
    entries = []
    assignment = {}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            entries.append((row["pair-id"], row["image-path"], row["mask-path"]))
            if row.get("split"):
                assignment[row["pair-id"]] = row["split"]
    return PairManifest(entries=entries, assignment=assignment)
