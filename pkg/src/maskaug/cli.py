"""Batch command-line front end.

Subcommands: augment, evaluate, rank, ttest, split, compare. All rasters are
PNG, all tables CSV with a header row, configs JSON. Exit codes: 0 success,
1 runtime failure, 2 usage/config error. Every command is deterministic
given identical inputs and config; `augment` writes the effective config
next to its outputs.
"""

from __future__ import annotations

import csv
import json
import sys
from collections import defaultdict
from pathlib import Path

import click
import numpy as np
from PIL import Image

from . import datasetio
from .augment import AugmentConfig, augment_dataset
from .metrics import compute_report, default_theta
from .stats import RankRow, h_decisions, rank_scores, sum_ranks, ttest2

SEPARATOR_WIDTH = 2
SEPARATOR_VALUE = 255


@click.group()
def main():
    """Mask-aware augmentation and segmentation evaluation toolkit."""


def _load_config(config_path: str | None, seed: int | None) -> AugmentConfig:
    if config_path is None:
        config = AugmentConfig()
    else:
        try:
            text = Path(config_path).read_text()
        except OSError as exc:
            raise click.UsageError(f"cannot read config: {exc}")
        try:
            config = AugmentConfig.from_json(text)
        except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
            raise click.UsageError(f"invalid config JSON {config_path}: {exc}")
    if seed is not None:
        from dataclasses import replace
        config = replace(config, seed=seed)
    return config


@main.command("augment")
@click.option("--config", "config_path", type=click.Path(), default=None,
              help="Augmentation config JSON.")
@click.option("--seed", type=int, default=None, help="Override the config seed.")
@click.option("--images", "images_dir", required=True, type=click.Path(exists=True))
@click.option("--masks", "masks_dir", required=True, type=click.Path(exists=True))
@click.option("--out", "out_dir", required=True, type=click.Path())
@click.option("--workers", type=int, default=1, show_default=True)
def cmd_augment(config_path, seed, images_dir, masks_dir, out_dir, workers):
    """Augment an image/mask pair directory into OUT."""
    config = _load_config(config_path, seed)
    try:
        manifest = datasetio.discover_pairs(images_dir, masks_dir)
        pairs = [datasetio.load_pair(ip, mp) for _, ip, mp in manifest.entries]
        outputs = augment_dataset(pairs, config, workers=workers)
    except Exception as exc:
        raise click.ClickException(str(exc))

    out = Path(out_dir)
    (out / "images").mkdir(parents=True, exist_ok=True)
    (out / "masks").mkdir(parents=True, exist_ok=True)
    name = config.interp.name
    rows = []
    k = 0
    for (pair_id, _, _) in manifest.entries:
        for ai in range(config.augmentations_per_pair):
            img, mask = outputs[k]
            k += 1
            fname = f"{pair_id}_{ai}_{name}.png"
            datasetio.save_image(img, out / "images" / fname)
            datasetio.save_mask(mask, out / "masks" / fname)
            # manifest paths are relative to the output dir so reruns into
            # different directories stay byte-identical
            rows.append([pair_id, ai, name,
                         f"images/{fname}", f"masks/{fname}"])
    with open(out / "manifest.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["pair-id", "aug-index", "config-name",
                         "image-path", "mask-path"])
        writer.writerows(rows)
    (out / "config.json").write_text(config.to_json())
    click.echo(f"wrote {len(rows)} augmented pairs to {out}")


@main.command("evaluate")
@click.option("--pred", "pred_dir", required=True, type=click.Path(exists=True))
@click.option("--gt", "gt_dir", required=True, type=click.Path(exists=True))
@click.option("--theta", type=float, default=None,
              help="Boundary tolerance in pixels; default 0.0075 x diagonal.")
@click.option("--config-name", default="NA", show_default=True)
@click.option("--out", "out_csv", required=True, type=click.Path())
def cmd_evaluate(pred_dir, gt_dir, theta, config_name, out_csv):
    """Score predicted masks against ground truth masks (paired by stem)."""
    pred_dir, gt_dir = Path(pred_dir), Path(gt_dir)
    preds = {p.stem: p for p in sorted(pred_dir.glob("*.png"))}
    gts = {p.stem: p for p in sorted(gt_dir.glob("*.png"))}
    unmatched = sorted(set(preds) ^ set(gts))
    if unmatched:
        raise click.ClickException(f"unmatched file stems: {unmatched}")
    if not preds:
        raise click.ClickException(f"no PNG masks found in {pred_dir}")
    rows = []
    try:
        for stem in sorted(preds):
            pred = datasetio.load_mask(preds[stem])
            gt = datasetio.load_mask(gts[stem])
            th = theta if theta is not None else default_theta(pred.width, pred.height)
            r = compute_report(pred, gt, theta=th)
            rows.append([stem, config_name, r.accuracy, r.iou, r.dice,
                         r.mean_bf_score])
    except Exception as exc:
        raise click.ClickException(str(exc))
    with open(out_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["image-id", "config-name", "accuracy", "iou",
                         "dice", "mean-bf-score"])
        writer.writerows(rows)
        means = [float(np.mean([row[i] for row in rows])) for i in range(2, 6)]
        writer.writerow(["MEAN", config_name, *means])
    click.echo(f"wrote {len(rows)} metric rows to {out_csv}")


@main.command("rank")
@click.option("--scores", "scores_csv", required=True, type=click.Path(exists=True))
@click.option("--group-by", default="image-id,metric", show_default=True,
              help="Score columns defining one ranking group.")
@click.option("--out", "out_csv", required=True, type=click.Path())
@click.option("--sums-out", "sums_csv", type=click.Path(), default=None,
              help="Rank-sum summary CSV; default <out>_sums.csv.")
def cmd_rank(scores_csv, group_by, out_csv, sums_csv):
    """Rank scores within groups (rank 1 = best) and sum ranks per method."""
    group_cols = [c.strip() for c in group_by.split(",") if c.strip()]
    groups: dict[tuple, list[tuple[str, float]]] = defaultdict(list)
    with open(scores_csv, newline="") as fh:
        reader = csv.DictReader(fh)
        for lineno, row in enumerate(reader, start=2):
            try:
                key = tuple(row[c] for c in group_cols)
                groups[key].append((row["config-name"], float(row["score"])))
            except (KeyError, ValueError, TypeError) as exc:
                raise click.ClickException(
                    f"malformed score row {lineno} in {scores_csv}: {exc}")
    if not groups:
        raise click.ClickException(f"no score rows in {scores_csv}")
    rank_rows = []
    for key in sorted(groups):
        methods = [m for m, _ in groups[key]]
        try:
            ranks = rank_scores([s for _, s in groups[key]])
        except ValueError as exc:
            raise click.ClickException(f"group {key}: {exc}")
        for method, rank in zip(methods, ranks):
            rank_rows.append((*key, method, rank))
    with open(out_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow([*group_cols, "config-name", "rank"])
        writer.writerows(rank_rows)
    sums = sum_ranks(RankRow("", "", method, rank)
                     for *_, method, rank in rank_rows)
    sums_path = sums_csv or str(Path(out_csv).with_suffix("")) + "_sums.csv"
    with open(sums_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["config-name", "rank-sum"])
        writer.writerows(sums)
    click.echo(f"wrote {len(rank_rows)} rank rows to {out_csv}; sums to {sums_path}")


@main.command("ttest")
@click.option("--ranks", "ranks_csv", required=True, type=click.Path(exists=True))
@click.option("--pair", "pair_spec", required=True,
              help='Method pair "A/B" to compare.')
@click.option("--alphas", default="0.05,0.2,0.35", show_default=True)
@click.option("--out", "out_csv", required=True, type=click.Path())
def cmd_ttest(ranks_csv, pair_spec, alphas, out_csv):
    """Two-sample t-test between two methods' ranks, per metric."""
    try:
        method_a, method_b = pair_spec.split("/")
    except ValueError:
        raise click.UsageError(f'bad --pair {pair_spec!r}; expected "A/B"')
    try:
        alpha_list = tuple(float(a) for a in alphas.split(","))
    except ValueError:
        raise click.UsageError(f"bad --alphas {alphas!r}")
    samples: dict[str, dict[str, list[tuple[str, float]]]] = defaultdict(
        lambda: defaultdict(list))
    with open(ranks_csv, newline="") as fh:
        for row in csv.DictReader(fh):
            samples[row["metric"]][row["config-name"]].append(
                (row["image-id"], float(row["rank"])))
    if not samples:
        raise click.ClickException(f"no rank rows in {ranks_csv}")
    out_rows = []
    for metric in sorted(samples):
        per_method = samples[metric]
        for m in (method_a, method_b):
            if m not in per_method:
                raise click.ClickException(
                    f"method {m!r} not present for metric {metric!r}")
        a = [r for _, r in sorted(per_method[method_a])]
        b = [r for _, r in sorted(per_method[method_b])]
        try:
            res = ttest2(a, b, alpha_list)
        except ValueError as exc:
            raise click.ClickException(f"metric {metric}: {exc}")
        out_rows.append([metric, f"{method_a}/{method_b}", res.p_value,
                         *res.h_values])
    with open(out_csv, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["metric", "method-pair", "p-value",
                         *[f"h-{a:g}" for a in alpha_list]])
        writer.writerows(out_rows)
    click.echo(f"wrote {len(out_rows)} t-test rows to {out_csv}")


@main.command("split")
@click.option("--images", "images_dir", required=True, type=click.Path(exists=True))
@click.option("--masks", "masks_dir", required=True, type=click.Path(exists=True))
@click.option("--fractions", default="0.70,0.15,0.15", show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", "out_csv", required=True, type=click.Path())
def cmd_split(images_dir, masks_dir, fractions, seed, out_csv):
    """Assign train/val/test splits and write the pair manifest CSV."""
    try:
        fracs = tuple(float(f) for f in fractions.split(","))
        if len(fracs) != 3:
            raise ValueError("expected three comma-separated fractions")
    except ValueError as exc:
        raise click.UsageError(f"bad --fractions {fractions!r}: {exc}")
    try:
        manifest = datasetio.discover_pairs(images_dir, masks_dir)
        manifest = datasetio.split(manifest, fracs, seed)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    datasetio.write_manifest(manifest, out_csv)
    counts = {s: sum(v == s for v in manifest.assignment.values())
              for s in datasetio.SPLITS}
    click.echo(f"wrote manifest {out_csv}: {counts}")


@main.command("compare")
@click.argument("image", type=click.Path(exists=True))
@click.argument("gt_mask", type=click.Path(exists=True))
@click.argument("mask_a", type=click.Path(exists=True))
@click.argument("mask_b", type=click.Path(exists=True))
@click.option("--out", "out_png", required=True, type=click.Path())
def cmd_compare(image, gt_mask, mask_a, mask_b, out_png):
    """Write a one-row composite: input | ground truth | mask A | mask B."""
    panels = []
    for path in (image, gt_mask, mask_a, mask_b):
        with Image.open(path) as im:
            if im.mode not in ("L", "RGB"):
                im = im.convert("RGB")
            panels.append(np.asarray(im, dtype=np.uint8))
    shapes = {p.shape[:2] for p in panels}
    if len(shapes) != 1:
        raise click.ClickException(f"panel dimensions differ: {sorted(shapes)}")
    if any(p.ndim == 3 for p in panels):
        panels = [np.repeat(p[:, :, None], 3, axis=2) if p.ndim == 2 else p
                  for p in panels]
    h = panels[0].shape[0]
    sep_shape = (h, SEPARATOR_WIDTH) + panels[0].shape[2:]
    sep = np.full(sep_shape, SEPARATOR_VALUE, dtype=np.uint8)
    strips = []
    for i, p in enumerate(panels):
        if i:
            strips.append(sep)
        strips.append(p)
    composite = np.concatenate(strips, axis=1)
    Image.fromarray(composite).save(out_png, format="PNG")
    click.echo(f"wrote composite {composite.shape[1]}x{h} to {out_png}")


if __name__ == "__main__":
    sys.exit(main())
