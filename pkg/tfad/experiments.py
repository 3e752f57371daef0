# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.experiments`

Ablation runs on a labeled benchmark. Every variant is derived from a base configuration, trained
on the train split with each seed, and evaluated on the test split.

=====================  =========================  =============  ======  ============  ============
Variant                Branches                   Decomposition  Normal  Time anomaly  Freq anomaly
=====================  =========================  =============  ======  ============  ============
freq_only              freq_trend, freq_residual  yes
time_raw               time_trend                 no
time_dec               time_trend, time_residual  yes
time_dec_nor           time_trend, time_residual  yes            yes
time_dec_time_an       time_trend, time_residual  yes                    yes
time_dec_nor_time_an   time_trend, time_residual  yes            yes     yes
time_dec_aug           time_trend, time_residual  yes            yes     yes           yes
full                   all four                   yes            yes     yes           yes
=====================  =========================  =============  ======  ============  ============

Variants train with the benchmark labels (``train.supervised``). The normal group keeps the
``normal_ratio`` of the base configuration. The anomaly groups keep its ``anomaly_ratio`` and
enable the injection methods of the group: point_scale, exchange, mixup and slow_slope in the
time domain, freq_anomaly in the frequency domain.
"""

import logging
from dataclasses import replace

import numpy as np

from .augment.injectionkind import InjectionKind
from .cli.pipelineconfig import PipelineConfig
from .errors import InvalidParameter
from .nn.branch import Branch
from .pipeline import Pipeline
from .synth.benchmark import Benchmark

logger = logging.getLogger(__name__)

METRICS = ("precision", "recall", "f1")

_TIME = (Branch.TIME_TREND, Branch.TIME_RESIDUAL)
_FREQ = (Branch.FREQ_TREND, Branch.FREQ_RESIDUAL)

TIME_ANOMALY_METHODS = (InjectionKind.POINT_SCALE, InjectionKind.EXCHANGE, InjectionKind.MIXUP, InjectionKind.SLOW_SLOPE)
FREQ_ANOMALY_METHODS = (InjectionKind.FREQ_ANOMALY,)

# name: (branches, decomposition, normal, time anomaly, frequency anomaly)
VARIANTS = {
    "freq_only": (_FREQ, True, False, False, False),
    "time_raw": ((Branch.TIME_TREND,), False, False, False, False),
    "time_dec": (_TIME, True, False, False, False),
    "time_dec_nor": (_TIME, True, True, False, False),
    "time_dec_time_an": (_TIME, True, False, True, False),
    "time_dec_nor_time_an": (_TIME, True, True, True, False),
    "time_dec_aug": (_TIME, True, True, True, True),
    "full": (_TIME + _FREQ, True, True, True, True),
}


def variant_config(base: PipelineConfig, name: str, seed: int | None = None) -> PipelineConfig:
    """Configuration of an ablation variant

    :raises InvalidParameter: When ``name`` is not a known variant
    """
    if name not in VARIANTS:
        raise InvalidParameter(f"Unknown ablation variant '{name}', expected one of {', '.join(VARIANTS)}")
    branches, decomposition, normal, time_anomaly, freq_anomaly = VARIANTS[name]

    config = PipelineConfig.from_dict(base.to_dict())
    config.model.branches = [str(b) for b in branches]
    config.decomposition = replace(config.decomposition, enabled=decomposition)
    config.train = replace(config.train, supervised=True)

    methods = (TIME_ANOMALY_METHODS if time_anomaly else ()) + (FREQ_ANOMALY_METHODS if freq_anomaly else ())
    config.augment = replace(
        config.augment,
        normal_ratio=config.augment.normal_ratio if normal else 0.0,
        anomaly_ratio=config.augment.anomaly_ratio if methods else 0.0,
        methods=[str(m) for m in methods] if methods else config.augment.methods,
    )
    if seed is not None:
        config.seed = int(seed)
    return config.validate()


def _summary(values: list[float]) -> dict:
    array = np.asarray(values, dtype=np.float64)
    return {"mean": float(array.mean()), "std": float(array.std())}


def run_ablation(config: PipelineConfig, benchmark: Benchmark, variants=None, seeds=(0, 1, 2, 3, 4)) -> dict:
    """Train and evaluate every variant with every seed

    :param config: Base configuration
    :param benchmark: Labeled benchmark, the validation split picks the threshold
    :param variants: Variant names, all of :py:data:`VARIANTS` by default
    :param seeds: One run per seed
    :return: Per variant ``{metric: {"mean", "std"}}`` for precision, recall and f1, plus ``runs``
        holding the report of every seed
    """
    variants = list(VARIANTS) if variants is None else list(variants)
    seeds = [int(s) for s in seeds]
    if not seeds:
        raise InvalidParameter("At least one seed is needed")

    results = {}
    for name in variants:
        runs = []
        for seed in seeds:
            pipeline = Pipeline(variant_config(config, name, seed))
            pipeline.fit(benchmark.train, benchmark.val)
            report = pipeline.evaluate(benchmark.test)
            runs.append({"seed": seed, **report.to_dict()})
            logger.info("Variant %s seed %d: F1 %.4f", name, seed, report.f1)

        summary = {metric: _summary([run[metric] for run in runs]) for metric in METRICS}
        summary["runs"] = runs
        results[name] = summary
        logger.info("Variant %s: mean F1 %.4f (std %.4f)", name, summary["f1"]["mean"], summary["f1"]["std"])

    return results
