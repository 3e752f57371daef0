# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""Desk scale runs on synthetic benchmarks, deselected by default (``pytest -m slow``)"""

from dataclasses import replace

import numpy as np
import pytest

from tfad.cli.pipelineconfig import PipelineConfig
from tfad.experiments import run_ablation, variant_config
from tfad.pipeline import Pipeline
from tfad.synth.benchmark import make_benchmark, seasonal_benchmark, unseen_kinds_benchmark

pytestmark = pytest.mark.slow

SEEDS = (0, 1, 2, 3, 4)


def test_end_to_end_detection():
    bench = make_benchmark(n_series=20, length=2000, rng=7)
    pipeline = Pipeline(PipelineConfig(seed=7))
    result = pipeline.fit(bench.train, bench.val)
    assert len(result.losses) <= 20
    assert pipeline.evaluate(bench.test).f1 >= 0.85


def test_end_to_end_detection_is_reproducible():
    bench = make_benchmark(n_series=5, length=1000, rng=8)
    scores = []
    for _ in range(2):
        pipeline = Pipeline(PipelineConfig(seed=8))
        pipeline.fit(bench.train, bench.val)
        scores.append([pipeline.score(s) for s in bench.test])
    assert scores[0] == scores[1]


def test_frequency_branches_and_decomposition_help_on_seasonal_anomalies():
    bench = seasonal_benchmark(n_series=10, length=2000, rng=9)
    results = run_ablation(PipelineConfig(), bench, ["time_raw", "time_dec", "full"], SEEDS)
    mean = {name: summary["f1"]["mean"] for name, summary in results.items()}
    assert mean["full"] >= mean["time_dec"]
    assert mean["time_dec"] >= mean["time_raw"]


def test_augmentation_helps_on_unseen_kinds():
    bench = unseen_kinds_benchmark(n_series=10, length=2000, rng=10)
    augmented, plain = [], []
    for seed in SEEDS:
        config = variant_config(PipelineConfig(), "full", seed)
        config.augment = replace(config.augment, normal_ratio=0.5, anomaly_ratio=0.4)
        without = variant_config(config, "full", seed)
        without.augment = replace(without.augment, normal_ratio=0.0, anomaly_ratio=0.0)
        for cfg, runs in ((config, augmented), (without, plain)):
            pipeline = Pipeline(cfg)
            pipeline.fit(bench.train, bench.val)
            runs.append(pipeline.evaluate(bench.test).f1)
    assert np.mean(augmented) >= np.mean(plain)
