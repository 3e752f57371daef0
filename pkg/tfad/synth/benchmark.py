# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.synth.benchmark`

Desk scale labeled benchmark: structural series with taxonomy anomalies, split 30% train,
20% validation and 50% test (at least one series per split).
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidParameter, TooFewSeries
from ..models.rngseed import RngSeed
from ..models.timeseries import TimeSeries
from ..models.utils import validate_positive_int, validate_ratio
from .anomalykind import AnomalyKind
from .generator import generate_structural
from .structuralconfig import StructuralConfig
from .taxonomy import inject_taxonomy

logger = logging.getLogger(__name__)

SPLITS = ("train", "val", "test")
MIN_SPAN = 8
MAX_SPAN = 32
SEASONAL_MIN_SPAN = 5
GAP = 4

_PERIODS = (16, 24, 32, 48, 64)


@dataclass
class Benchmark:
    """Train, validation and test series"""

    train: list[TimeSeries] = field(default_factory=list)
    val: list[TimeSeries] = field(default_factory=list)
    test: list[TimeSeries] = field(default_factory=list)

    def split(self, name: str) -> list[TimeSeries]:
        if name not in SPLITS:
            raise InvalidParameter(f"Unknown split '{name}'")
        return getattr(self, name)

    def all(self) -> list[TimeSeries]:
        return self.train + self.val + self.test

    def labeled_fraction(self) -> float:
        series = self.all()
        labeled = sum(int(s.labels_or_zeros().sum()) for s in series)
        return labeled / max(1, sum(s.length for s in series))


def split_sizes(n_series: int) -> tuple[int, int, int]:
    """Number of train, validation and test series"""
    if n_series < 3:
        raise TooFewSeries(f"A benchmark needs at least 3 series (one per split), got {n_series}")
    n_train = max(1, round(0.3 * n_series))
    n_val = max(1, round(0.2 * n_series))
    n_test = n_series - n_train - n_val
    while n_test < 1:
        if n_train > n_val:
            n_train -= 1
        else:
            n_val -= 1
        n_test += 1
    return n_train, n_val, n_test


def random_structure(gen: np.random.Generator, length: int, dims: int) -> StructuralConfig:
    """A seasonal series with a harmonic, a slow trend and light noise"""
    period = float(gen.choice(_PERIODS))
    amplitude = gen.uniform(0.5, 1.5)
    components = (
        (amplitude, gen.uniform(-0.3, 0.3) * amplitude, 1.0 / period),
        (gen.uniform(0.1, 0.3) * amplitude, 0.0, 2.0 / period),
    )
    trend = ((0, gen.uniform(-1.0, 1.0) * amplitude / length),)
    return StructuralConfig(components, trend, 0.05 * amplitude, length, dims)


def _min_span(kind: AnomalyKind) -> int:
    if kind.is_point:
        return 1
    return SEASONAL_MIN_SPAN if kind == AnomalyKind.SEASONAL else 2


def _kind_params(kind: AnomalyKind, length: int, scale: float, gen: np.random.Generator) -> dict:
    if kind == AnomalyKind.GLOBAL_POINT:
        return {"factor": gen.uniform(3.0, 5.0) * gen.choice((-1.0, 1.0))}
    if kind == AnomalyKind.SEASONAL:
        return {"shift": int(gen.integers(1, 4))}
    if kind == AnomalyKind.SHAPELET:
        return {"period": int(gen.integers(2, max(3, length // 2 + 1)))}
    if kind == AnomalyKind.TREND:
        return {"slope": gen.choice((-1.0, 1.0)) * gen.uniform(2.0, 4.0) * scale / max(1, length - 1)}
    return {}


def _place(free: np.ndarray, length: int, margin: int, gen: np.random.Generator) -> int | None:
    """Random start of a span of ``length`` that keeps a gap from every other anomaly"""
    total = free.size
    if total - length < margin:
        return None
    # cumulative count of busy samples, a window is usable when it holds no busy sample
    busy = np.concatenate(([0], np.cumsum(~free)))
    starts = np.arange(margin, total - length + 1)
    low = np.maximum(starts - GAP, 0)
    high = np.minimum(starts + length + GAP, total)
    usable = starts[busy[high] - busy[low] == 0]
    if usable.size == 0:
        return None
    return int(usable[gen.integers(usable.size)])


def inject_anomalies(series: TimeSeries, kinds, fraction: float, gen: np.random.Generator, margin: int = 0) -> TimeSeries:
    """Inject taxonomy anomalies until ``round(fraction * T)`` points are labeled

    Anomalies never overlap and keep a gap of a few samples between each other.
    """
    target = round(fraction * series.length)
    free = np.ones(series.length, dtype=bool)
    labeled = 0
    kinds = list(kinds)

    while labeled < target:
        remaining = target - labeled
        fitting = [k for k in kinds if _min_span(k) <= remaining]
        if not fitting:
            break
        kind = fitting[int(gen.integers(len(fitting)))]
        if kind.is_point:
            length = 1
        else:
            length = max(_min_span(kind), min(remaining, int(gen.integers(MIN_SPAN, MAX_SPAN + 1))))

        start = _place(free, length, margin, gen)
        if start is None:
            logger.debug("No room left for anomalies in '%s' (%d/%d labeled)", series.id, labeled, target)
            break

        params = _kind_params(kind, length, float(series.values.std()) or 1.0, gen)
        where = start if kind.is_point else (start, length)
        series = inject_taxonomy(series, kind, where, params, gen)

        free[start : start + length] = False
        labeled = int(series.labels_or_zeros().sum())

    return series


def make_benchmark(
    n_series: int = 10,
    length: int = 2000,
    kinds=None,
    rng=0,
    anomaly_fraction: float = 0.02,
    dims: int = 1,
    margin: int = 120,
    split_kinds: dict | None = None,
) -> Benchmark:
    """Generate a labeled benchmark

    :param n_series: Number of series, at least 3
    :param length: Samples per series
    :param kinds: Anomaly kinds drawn uniformly, all five by default
    :param rng: Seed. Series ``i`` is generated from its own sub-stream
    :param anomaly_fraction: Fraction of labeled points per series
    :param dims: Dimensions per series
    :param margin: No anomaly starts in the first ``margin`` samples (capped at a quarter of the
        length), the first full window of a detector cannot cover them
    :param split_kinds: Optional kinds per split name (``train``, ``val``, ``test``)
    :raises TooFewSeries: When ``n_series < 3``
    """
    sizes = split_sizes(n_series)
    validate_positive_int(length, "length")
    fraction = validate_ratio(anomaly_fraction, "anomaly_fraction")
    margin = min(int(margin), length // 4)

    def parse(values):
        parsed = [AnomalyKind.parse(k) for k in (AnomalyKind.members() if values is None else values)]
        if any(k is None for k in parsed):
            raise InvalidParameter(f"Unknown anomaly kind in {values}")
        return parsed

    default_kinds = parse(kinds)
    per_split = {name: parse(split_kinds[name]) for name in (split_kinds or {})}

    root = RngSeed(rng)
    benchmark = Benchmark()
    index = 0
    for name, size in zip(SPLITS, sizes):
        split_kind_list = per_split.get(name, default_kinds)
        for _ in range(size):
            gen = root.generator(index)
            series = generate_structural(random_structure(gen, length, dims), gen, id=f"{name}-{index:03d}")
            if fraction > 0 and split_kind_list:
                series = inject_anomalies(series, split_kind_list, fraction, gen, margin)
            benchmark.split(name).append(series)
            index += 1

    logger.debug(
        "Benchmark: %d/%d/%d series, labeled fraction %.4f",
        len(benchmark.train),
        len(benchmark.val),
        len(benchmark.test),
        benchmark.labeled_fraction(),
    )
    return benchmark


def seasonal_benchmark(n_series: int = 10, length: int = 2000, rng=0, anomaly_fraction: float = 0.02) -> Benchmark:
    """Benchmark whose only anomalies are seasonal ones"""
    return make_benchmark(n_series, length, [AnomalyKind.SEASONAL], rng, anomaly_fraction)


def unseen_kinds_benchmark(n_series: int = 10, length: int = 2000, rng=0, anomaly_fraction: float = 0.02) -> Benchmark:
    """Benchmark whose test split holds subsequence kinds absent from train and validation"""
    point_kinds = [AnomalyKind.GLOBAL_POINT, AnomalyKind.CONTEXT_POINT]
    return make_benchmark(
        n_series,
        length,
        rng=rng,
        anomaly_fraction=anomaly_fraction,
        split_kinds={"train": point_kinds, "val": point_kinds, "test": AnomalyKind.members()},
    )

