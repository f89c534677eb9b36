"""
Subcommand adapters. Each one turns the frozen config and the parsed arguments into library calls, writes the
artifacts and prints the result; every number printed comes straight from the library.
"""

import json
import logging
import os
import sys
from dataclasses import asdict

import numpy as np
import pandas as pd

from samkit.bounds import BoundRequest, compute_bound
from samkit.data import SynthConfig, load_dataset, load_parcellation, synth_generate, write_dataset, write_report
from samkit.data.io import FLOAT_FORMAT
from samkit.errors import InputError
from samkit.pipeline import (PipelineConfig, bound_curve, build_sam, coverage_experiment, method_comparison,
                             overlap_scores, rademacher_experiment, sample_size_sweep)

logger = logging.getLogger(__name__)


def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    raise TypeError(f"{type(value).__name__} is not json serializable")


def _emit(args, record, text: str) -> None:
    if args.json:
        print(json.dumps(record, default=_json_default))
    else:
        print(text)


def _dump_config(cfg, artifact: str) -> None:
    directory = os.path.dirname(os.path.abspath(artifact))
    os.makedirs(directory, exist_ok=True)
    cfg.dump_to(os.path.join(directory, "config.yaml"))


def _write_table(table: pd.DataFrame, path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def bound(cfg, args) -> int:
    dim = args.dim + 1 if cfg.BOUND.DIM_INCLUDES_BIAS else args.dim
    result = compute_bound(BoundRequest(cfg.BOUND.METHOD, args.n, dim, cfg.BOUND.DELTA))
    if result.vacuous:
        logger.warning("The %s bound is vacuous for n=%d, dim=%d: %.4f >= 1.", result.method.value, args.n, dim,
                       result.delta_n)
    _emit(args, result.to_dict(), f"{result.delta_n:.4f}")
    return 0


def sam(cfg, args) -> int:
    if not cfg.DATA.MANIFEST or not cfg.DATA.ATLAS:
        raise InputError("sam needs a dataset manifest (--data) and an atlas (--atlas).")
    dataset = load_dataset(cfg.DATA.MANIFEST)
    parcellation = load_parcellation(cfg.DATA.ATLAS)
    report = build_sam(dataset, parcellation, PipelineConfig.from_cfg(cfg))

    fmt = cfg.REPORT.FORMAT
    out = args.out or os.path.join(cfg.OUTPUT_DIR, f"report.{fmt}")
    write_report(report, out, fmt=fmt)
    _dump_config(cfg, out)
    logger.info("Report written to %s.", out)
    if args.compare_out:
        _write_table(method_comparison(report), args.compare_out)
        _dump_config(cfg, args.compare_out)

    names = [a.roi_name for a in report.analyses if a.significant]
    _emit(args, report.to_dict(),
          f"{len(names)} of {report.n_rois} regions significant" + (f": {', '.join(names)}" if names else ""))
    return 0


def synth(cfg, args) -> int:
    result = synth_generate(SynthConfig.from_cfg(cfg))
    out_dir = args.out or cfg.OUTPUT_DIR
    manifest = write_dataset(result.dataset, result.parcellation, out_dir, ground_truth=result.ground_truth)
    _dump_config(cfg, manifest)
    _emit(args, {"manifest": manifest, "n": result.dataset.n, "d": result.dataset.n_features,
                 "rois": result.parcellation.n_rois, "effect_rois": sorted(result.ground_truth)}, manifest)
    return 0


def coverage(cfg, args) -> int:
    result = coverage_experiment(n=args.n, dim=args.dim, method=cfg.BOUND.METHOD, delta=cfg.BOUND.DELTA,
                                 trials=cfg.SIMULATION.TRIALS, seed=cfg.SEED, holdout=cfg.SIMULATION.HOLDOUT,
                                 effect_size=cfg.SIMULATION.EFFECT_SIZE, c_reg=cfg.SVM.C_REG, tol=cfg.SVM.TOL,
                                 threads=cfg.THREADS)
    _emit(args, result.to_dict(),
          f"{result.violations}/{result.trials} violations, rate {result.violation_rate:.4f}, "
          f"delta_n {result.delta_n:.4f}")
    return 0


def rademacher(cfg, args) -> int:
    result = rademacher_experiment(args.n, args.dim, cfg.SIMULATION.TRIALS, cfg.SEED, threads=cfg.THREADS)
    _emit(args, asdict(result), f"{result.estimate:.4f} +- {result.stderr:.4f}")
    return 0


def sweep(cfg, args) -> int:
    sizes = sorted(set(cfg.SIMULATION.N_GRID))
    if not sizes:
        raise InputError("The sample size grid is empty.")
    largest = sizes[-1] + sizes[-1] % 2
    synth_config = SynthConfig(n=largest, rois=cfg.SYNTH.ROIS, voxels_per_roi=cfg.SYNTH.VOXELS_PER_ROI,
                               effect_rois=tuple(cfg.SYNTH.EFFECT_ROIS), effect_size=cfg.SYNTH.EFFECT_SIZE,
                               noise_sd=cfg.SYNTH.NOISE_SD, seed=cfg.SEED)
    data = synth_generate(synth_config)
    result = sample_size_sweep(data.dataset, data.parcellation, PipelineConfig.from_cfg(cfg), sizes)
    if args.out:
        _write_table(result.regions, args.out)
        _dump_config(cfg, args.out)

    per_size, lines = [], []
    for n, selected in sorted(result.significant_sets().items()):
        scores = overlap_scores(selected, data.ground_truth, data.parcellation.roi_ids)
        per_size.append({"n": n, "significant": sorted(selected), **scores.to_dict()})
        lines.append(f"n={n}: {len(selected)} significant, sensitivity {scores.sensitivity:.3f}, "
                     f"specificity {scores.specificity:.3f}, dice {scores.dice:.3f}")
    stability = result.stability.to_dict(orient="records")
    lines.extend(f"n={row['n_from']} -> {row['n_to']}: nested {bool(row['nested'])}, dice {row['dice']:.3f}"
                 for row in stability)
    _emit(args, {"sizes": per_size, "stability": stability}, "\n".join(lines))
    return 0


def curve(cfg, args) -> int:
    table = pd.concat([bound_curve(args.n_grid, args.dim_grid, m, cfg.BOUND.DELTA) for m in args.methods],
                      ignore_index=True)
    if args.out:
        _write_table(table, args.out)
        _dump_config(cfg, args.out)
    if args.json:
        _emit(args, table.to_dict(orient="records"), "")
    elif args.out:
        print(args.out)
    else:
        table.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return 0


COMMANDS = {
    "bound": bound,
    "sam": sam,
    "synth": synth,
    "coverage": coverage,
    "rademacher": rademacher,
    "sweep": sweep,
    "curve": curve,
}
