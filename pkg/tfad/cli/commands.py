# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.cli.commands`

The batch commands. Each one reads its inputs, writes its outputs atomically and returns the
key/value summary printed by the command line front end. Outputs only depend on the inputs,
the configuration and the seed.
"""

import logging
import re
from pathlib import Path

import numpy as np
import pandas as pd
import yaml

from ..errors import ConfigError, LengthMismatch, ParseError
from ..evaluation.evalreport import EvalReport, pooled_report
from ..evaluation.threshold import DEFAULT_THRESHOLD
from ..experiments import VARIANTS, run_ablation
from ..fileio import atomic_write_text
from ..models.timeseries import TimeSeries
from ..pipeline import Pipeline
from ..synth.benchmark import SPLITS, Benchmark, make_benchmark, seasonal_benchmark, unseen_kinds_benchmark
from .ingest import ingest, read_labels_csv, write_labels_csv, write_ndjson, write_pairs_ndjson, write_scores_csv
from .pipelineconfig import PipelineConfig

logger = logging.getLogger(__name__)

MANIFEST = "detect.yaml"
PRESETS = ("default", "seasonal", "unseen")


def _dump_yaml(path, data):
    atomic_write_text(path, yaml.safe_dump(data, sort_keys=False, default_flow_style=False))


def _path(value, name: str) -> Path:
    if value is None:
        raise ConfigError(f"No {name} path given (command line or paths.{name} in the configuration)")
    return Path(value)


def _file_name(series_id: str) -> str:
    return re.sub(r"[^\w.-]", "_", series_id)


def cmd_train(config: PipelineConfig, train=None, val=None, checkpoint=None, debug: bool = False) -> dict:
    """Train a pipeline, write the checkpoint and the loss trace (``<checkpoint>.losses.yaml``)"""
    train_path = _path(train or config.paths.train, "train")
    val_path = val or config.paths.val
    checkpoint = Path(checkpoint or config.paths.checkpoint)

    train_series = ingest(train_path)
    val_series = ingest(val_path) if val_path else []

    pipeline = Pipeline(config, debug)
    result = pipeline.fit(train_series, val_series)
    pipeline.save(checkpoint)

    trace = checkpoint.with_name(checkpoint.name + ".losses.yaml")
    _dump_yaml(trace, {"initial_loss": result.initial_loss, "losses": list(result.losses), "threshold": pipeline.threshold})
    logger.info("Checkpoint written to %s", checkpoint)

    return {
        "checkpoint": str(checkpoint),
        "epochs": len(result.losses),
        "final_loss": f"{result.final_loss:.6g}",
        "series": len(train_series),
        "threshold": f"{pipeline.threshold:.6g}",
    }


def cmd_detect(checkpoint, data, output, threshold: float | None = None, debug: bool = False) -> dict:
    """Score every series of a dataset

    Writes ``<id>.scores.csv`` (``start,score``) and ``<id>.labels.csv`` (``timestamp,label``) per
    series and the ``detect.yaml`` manifest in the output directory.
    """
    pipeline = Pipeline.load(checkpoint, debug)
    if threshold is not None:
        pipeline.threshold = threshold
    output = Path(output)

    entries = []
    windows = anomalies = 0
    for series in ingest(data):
        result = pipeline.detect(series)
        name = _file_name(series.id)
        write_scores_csv(output / f"{name}.scores.csv", result.window_scores)
        write_labels_csv(output / f"{name}.labels.csv", result.point_labels)
        entries.append({"id": series.id, "scores": f"{name}.scores.csv", "labels": f"{name}.labels.csv"})
        windows += len(result.window_scores)
        anomalies += result.anomaly_count

    spec = pipeline.config.window_spec()
    manifest = {
        "threshold": pipeline.threshold,
        "window": {"context_len": spec.context_len, "suspect_len": spec.suspect_len, "stride": spec.stride},
        "series": entries,
    }
    _dump_yaml(output / MANIFEST, manifest)

    return {"anomalies": anomalies, "output": str(output), "series": len(entries), "windows": windows}


def _read_predictions(path) -> tuple[dict[str, np.ndarray], float]:
    """Point predictions by series id, and their threshold

    ``path`` is a detect output directory, a ``timestamp,label`` file or a labeled dataset.
    """
    path = Path(path)
    if path.is_dir():
        try:
            manifest = yaml.safe_load((path / MANIFEST).read_text(encoding="utf-8"))
            entries = manifest["series"]
            threshold = float(manifest["threshold"])
        except (OSError, yaml.YAMLError, KeyError, TypeError, ValueError) as e:
            raise ParseError(f"{path}: not a detect output directory: {e}") from e
        return {str(e["id"]): read_labels_csv(path / e["labels"]) for e in entries}, threshold

    if path.suffix.lower() == ".csv":
        try:
            header = [str(c).strip() for c in pd.read_csv(path, nrows=0).columns]
        except (OSError, pd.errors.EmptyDataError, pd.errors.ParserError) as e:
            raise ParseError(f"{path}: {e}") from e
        if header == ["timestamp", "label"]:
            return {path.stem: read_labels_csv(path)}, DEFAULT_THRESHOLD

    predictions = {}
    for series in ingest(path):
        if not series.has_labels:
            raise ParseError(f"{path}: series '{series.id}' has no labels")
        predictions[series.id] = series.labels
    return predictions, DEFAULT_THRESHOLD


def _match(predictions: dict, truths: list[TimeSeries]) -> list[tuple[TimeSeries, np.ndarray]]:
    if len(predictions) == 1 and len(truths) == 1:
        return [(truths[0], next(iter(predictions.values())))]
    pairs = []
    for truth in truths:
        if truth.id not in predictions:
            raise LengthMismatch(f"No prediction for series '{truth.id}'")
        pairs.append((truth, predictions[truth.id]))
    return pairs


def cmd_eval(predictions, truth, output) -> dict:
    """Compare point predictions with the ground truth and write the report YAML

    The report holds the pooled point adjusted metrics of the dataset and one record per series.
    """
    predicted, threshold = _read_predictions(predictions)
    truths = ingest(truth)
    matched = _match(predicted, [t for t in truths if t.has_labels])
    if not matched:
        raise ParseError(f"{truth}: no labeled series")

    records = []
    for series, pred in matched:
        if len(pred) != series.length:
            raise LengthMismatch(f"Series '{series.id}': {len(pred)} predictions for {series.length} points")
        records.append({"id": series.id, **pooled_report([pred], [series.labels], threshold).to_dict()})
    report: EvalReport = pooled_report([p for _, p in matched], [s.labels for s, _ in matched], threshold)

    _dump_yaml(output, {"dataset": Path(truth).stem, **report.to_dict(), "series": records})
    return {"f1": f"{report.f1:.6g}", "precision": f"{report.precision:.6g}", "recall": f"{report.recall:.6g}", "report": str(output)}


def synth_benchmark(
    preset: str, n_series: int, length: int, seed: int, anomaly_fraction: float, dims: int = 1, kinds=None
) -> Benchmark:
    if preset == "seasonal":
        return seasonal_benchmark(n_series, length, seed, anomaly_fraction)
    if preset == "unseen":
        return unseen_kinds_benchmark(n_series, length, seed, anomaly_fraction)
    if preset != "default":
        raise ConfigError(f"Unknown benchmark preset '{preset}', expected one of {', '.join(PRESETS)}")
    return make_benchmark(n_series, length, kinds, seed, anomaly_fraction, dims)


def cmd_synth(
    output,
    seed: int,
    n_series: int = 10,
    length: int = 2000,
    anomaly_fraction: float = 0.02,
    dims: int = 1,
    kinds=None,
    preset: str = "default",
) -> dict:
    """Generate a benchmark, written as ``train.ndjson``, ``val.ndjson`` and ``test.ndjson``"""
    benchmark = synth_benchmark(preset, n_series, length, seed, anomaly_fraction, dims, kinds)
    output = Path(output)
    for name in SPLITS:
        write_ndjson(output / f"{name}.ndjson", benchmark.split(name))
    return {
        "labeled_fraction": f"{benchmark.labeled_fraction():.6g}",
        "output": str(output),
        "series": len(benchmark.all()),
    }


def cmd_augment(config: PipelineConfig, data, output, debug: bool = False) -> dict:
    """Write the augmented training window pairs of a dataset as NDJSON"""
    pipeline = Pipeline(config, debug)
    pairs = pipeline.training_pairs(ingest(_path(data or config.paths.train, "train")))
    write_pairs_ndjson(output, pairs)
    return {"anomalous": sum(p.label for p in pairs), "output": str(output), "pairs": len(pairs)}


def _load_benchmark(data_dir) -> Benchmark:
    data_dir = Path(data_dir)
    return Benchmark(*(ingest(data_dir / f"{name}.ndjson") for name in SPLITS))


def cmd_ablation(
    config: PipelineConfig,
    output,
    seeds,
    variants=None,
    data_dir=None,
    preset: str = "seasonal",
    n_series: int = 10,
    length: int = 2000,
) -> dict:
    """Run the ablation variants and write the YAML report

    The benchmark is read from ``data_dir`` (``synth`` output) or generated from the seed of the
    configuration.
    """
    for name in variants or ():
        if name not in VARIANTS:
            raise ConfigError(f"Unknown ablation variant '{name}', expected one of {', '.join(VARIANTS)}")
    if data_dir is not None:
        benchmark = _load_benchmark(data_dir)
    else:
        benchmark = synth_benchmark(preset, n_series, length, config.seed, 0.02)

    results = run_ablation(config, benchmark, variants, seeds)
    _dump_yaml(output, {"seeds": [int(s) for s in seeds], "variants": results})

    summary = {"report": str(output), "variants": len(results)}
    for name, result in results.items():
        summary[f"f1_{name}"] = f"{result['f1']['mean']:.6g}"
    return summary
