# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.augment.augmentedset`

Builds the training set: original window pairs, extra normal pairs and anomaly injected pairs.
Injections are confined to the suspect window, the context window of every pair stays as it
was in the source pair.
"""

import logging
import math

import numpy as np

from ..errors import NoMethodsEnabled
from ..models.rngseed import RngSeed
from ..models.timeseries import TimeSeries
from ..models.windowpair import WindowPair
from .augmentconfig import AugmentConfig
from .freqmode import FreqMode
from .injectionkind import InjectionKind
from .injections import (
    MIN_FREQ_SPAN,
    inject_exchange,
    inject_freq_anomaly,
    inject_mixup,
    inject_point_anomaly,
    inject_slow_slope,
)
from .normal import augment_normal_freq, smooth_normal

logger = logging.getLogger(__name__)

_NORMAL_STREAM = 1
_ANOMALY_STREAM = 2


def usable_methods(cfg: AugmentConfig, suspect_len: int) -> list[InjectionKind]:
    """Enabled methods that can alter a suspect window of ``suspect_len`` samples"""
    methods = []
    for kind in cfg.methods:
        if kind == InjectionKind.FREQ_ANOMALY and suspect_len < MIN_FREQ_SPAN:
            continue
        if kind == InjectionKind.SLOW_SLOPE and suspect_len < 2:
            continue
        methods.append(kind)
    return methods


def _draw_span(gen: np.random.Generator, pair: WindowPair, min_len: int = 1) -> tuple[int, int]:
    suspect = pair.suspect_len
    low = min(max(min_len, math.ceil(suspect / 4)), suspect)
    length = int(gen.integers(low, suspect + 1))
    start = pair.context_len + int(gen.integers(0, suspect - length + 1))
    return start, length


def _draw_donor(gen: np.random.Generator, pair: WindowPair, pairs: list[WindowPair]) -> WindowPair | None:
    donors = [p for p in pairs if p is not pair and p.dims == pair.dims and p.full_len == pair.full_len]
    if not donors:
        return None
    return donors[int(gen.integers(len(donors)))]


def _scale(pair: WindowPair) -> float:
    scale = float(np.std(pair.context))
    return scale if scale > 1e-8 else 1.0


def _inject(kind: InjectionKind, pair: WindowPair, pairs: list[WindowPair], cfg: AugmentConfig, gen) -> TimeSeries:
    series = TimeSeries(pair.source_id, pair.full)

    if kind == InjectionKind.POINT_SCALE:
        index = pair.context_len + int(gen.integers(pair.suspect_len))
        factor = gen.uniform(2.0, 6.0) * gen.choice((-1.0, 1.0))
        return inject_point_anomaly(series, index, factor, gen)

    if kind == InjectionKind.EXCHANGE:
        span = _draw_span(gen, pair)
        donor = _draw_donor(gen, pair, pairs)
        if donor is None:
            # exchange inside the same window
            return inject_exchange(series, span, (int(gen.integers(0, pair.full_len - span[1] + 1)), span[1]))
        start = int(gen.integers(0, donor.full_len - span[1] + 1))
        return inject_exchange(series, span, (start, span[1]), TimeSeries(donor.source_id, donor.full))

    if kind == InjectionKind.MIXUP:
        span = _draw_span(gen, pair)
        donor = _draw_donor(gen, pair, pairs)
        if donor is None:
            other = np.roll(pair.full, pair.full_len // 2, axis=1)
        else:
            other = donor.full
        return inject_mixup(series, TimeSeries(pair.source_id, other), gen.uniform(0.2, 0.8), span)

    if kind == InjectionKind.FREQ_ANOMALY:
        span = _draw_span(gen, pair, MIN_FREQ_SPAN)
        mode = FreqMode.members()[int(gen.integers(3))]
        if mode == FreqMode.SCALE_BIN:
            magnitude = gen.uniform(1.0, 3.0) if gen.random() < 0.5 else gen.uniform(-0.9, -0.5)
        elif mode == FreqMode.ZERO_BIN:
            magnitude = 1.0
        else:
            magnitude = float(gen.integers(1, 4))
        return inject_freq_anomaly(series, span, mode, magnitude, gen)

    if kind == InjectionKind.SLOW_SLOPE:
        span = _draw_span(gen, pair, 2)
        height = gen.uniform(1.0, 3.0) * _scale(pair) * gen.choice((-1.0, 1.0))
        dims = cfg.slow_slope_dims
        if dims is not None:
            dims = [d for d in dims if d < pair.dims] or None
        return inject_slow_slope(series, span, height / (span[1] - 1), dims)

    raise NoMethodsEnabled(f"Unknown injection method '{kind}'")


def _anomaly_pair(i: int, sources, pairs, methods, cfg: AugmentConfig, root: RngSeed) -> WindowPair:
    gen = root.generator(_ANOMALY_STREAM, i)
    pair = sources[int(gen.integers(len(sources)))]
    kind = methods[int(gen.integers(len(methods)))]
    injected = _inject(kind, pair, pairs, cfg, gen)

    if np.array_equal(injected.values, pair.full):
        # degenerate draw (flat window, identical donor...), fall back to a point anomaly
        kind = InjectionKind.POINT_SCALE
        injected = _inject(kind, pair, pairs, cfg, gen)

    return WindowPair(injected.values, pair.context_len, 1, pair.start, f"{pair.source_id}~{kind}")


def _normal_pair(i: int, sources, cfg: AugmentConfig, root: RngSeed) -> WindowPair:
    gen = root.generator(_NORMAL_STREAM, i)
    pair = sources[int(gen.integers(len(sources)))]
    series = TimeSeries(pair.source_id, pair.full)

    if gen.random() < 0.5 and pair.full_len >= 3:
        augmented = smooth_normal(series, cfg.smooth_lambda)
        tag = "smooth"
    else:
        augmented = augment_normal_freq(series, cfg.freq_perturb_scale, gen)
        tag = "freq"

    return WindowPair(augmented.values, pair.context_len, 0, pair.start, f"{pair.source_id}~{tag}")


def build_augmented_set(pairs: list[WindowPair], cfg: AugmentConfig, rng) -> list[WindowPair]:
    """Originals followed by the normal augmented pairs and the anomaly injected pairs

    :param pairs: Original window pairs
    :param cfg: Ratios and enabled methods
    :param rng: :py:class:`~tfad.models.rngseed.RngSeed` or integer seed. Output ``i`` of each
        group draws from its own sub-stream, the result does not depend on evaluation order
    :return: ``len(pairs) + ceil(normal_ratio * len(pairs)) + ceil(anomaly_ratio * len(pairs))`` pairs
    :raises NoMethodsEnabled: When anomalies are requested but no method is enabled
        (or none can alter suspect windows this short)
    """
    pairs = list(pairs)
    n_normal = math.ceil(cfg.normal_ratio * len(pairs))
    n_anomaly = math.ceil(cfg.anomaly_ratio * len(pairs))

    methods = list(cfg.methods)
    if cfg.anomaly_ratio > 0 and pairs:
        methods = usable_methods(cfg, min(p.suspect_len for p in pairs))
    if cfg.anomaly_ratio > 0 and not methods:
        raise NoMethodsEnabled("Anomaly augmentation is enabled but no injection method is usable")

    if not pairs or (n_normal == 0 and n_anomaly == 0):
        return pairs

    root = RngSeed(rng)
    sources = [p for p in pairs if p.label == 0] or pairs

    normal = [_normal_pair(i, sources, cfg, root) for i in range(n_normal)]
    anomalies = [_anomaly_pair(i, sources, pairs, methods, cfg, root) for i in range(n_anomaly)]

    logger.debug("Augmented set: %d originals, %d normal, %d anomalies", len(pairs), len(normal), len(anomalies))
    return pairs + normal + anomalies
