# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.synth.taxonomy`

Injection of the five anomaly kinds of the benchmark taxonomy. Point kinds take an index,
subsequence kinds take a ``(start, length)`` span.

===============  ========================================================================
Kind             Parameters (``params`` keys, defaults)
===============  ========================================================================
global_point     ``factor`` (3.0): raised as needed so that ``|x|`` exceeds 1.5 times the
                 largest absolute value of the dimension
context_point    ``window`` (2): the point moves at least ``3 sigma`` away from the mean of
                 its ``window`` neighbours on each side, to the global bound farther from
                 that mean when it is far enough, else just past it
shapelet         ``period`` (span length / 2): square wave with the mean and the standard
                 deviation of the replaced span
seasonal         ``shift`` (2): dominant spectrum peak of the span moved by ``shift`` bins
trend            ``slope`` (3 standard deviations over the span): additive ramp
===============  ========================================================================

Every kind accepts ``dim`` to select the dimension, a random one by default.
"""

import numpy as np

from ..augment.freqmode import FreqMode
from ..augment.injections import inject_freq_anomaly, inject_point_anomaly, inject_slow_slope
from ..errors import DimensionMismatch, IndexOutOfRange, UnknownKind
from ..models.rngseed import as_rng
from ..models.timeseries import TimeSeries
from ..models.utils import validate_span
from .anomalykind import AnomalyKind

GLOBAL_MARGIN = 1.5
CONTEXT_SIGMAS = 3.0
SIGMA_FLOOR = 0.1
"""Floor of the local standard deviation, relative to the standard deviation of the dimension"""


def _dimension(series: TimeSeries, params: dict, gen) -> int:
    dim = params.get("dim")
    if dim is None:
        return 0 if series.dims == 1 else int(gen.integers(series.dims))
    if not 0 <= int(dim) < series.dims:
        raise DimensionMismatch(f"Dimension {dim} out of range for a series with {series.dims} dimensions")
    return int(dim)


def _index(series: TimeSeries, where) -> int:
    index = int(where[0] if isinstance(where, tuple | list) else where)
    if not 0 <= index < series.length:
        raise IndexOutOfRange(f"Index {index} out of range for length {series.length}")
    return index


def _global_point(series, index, params, dim, gen) -> TimeSeries:
    row = series.values[dim]
    factor = float(params.get("factor", 3.0))
    sign = -1.0 if factor < 0 else 1.0
    peak = float(np.max(np.abs(row)))
    x = row[index]
    rms = float(np.sqrt(np.mean(row**2))) or 1.0
    if abs(x) < 1e-6 * rms:
        # offset rule of inject_point_anomaly: x + factor * rms
        magnitude = max(abs(factor), GLOBAL_MARGIN * peak / rms + 1.0)
    else:
        magnitude = max(abs(factor), GLOBAL_MARGIN * peak / abs(x))
    return inject_point_anomaly(series, index, sign * magnitude, gen, dim=dim)


def _context_point(series, index, params, dim) -> TimeSeries:
    row = series.values[dim]
    window = int(params.get("window", 2))
    neighbours = np.concatenate((row[max(0, index - window) : index], row[index + 1 : index + window + 1]))
    if neighbours.size == 0:
        neighbours = row[index : index + 1]
    local_mean = float(neighbours.mean())
    sigma = max(float(neighbours.std()), SIGMA_FLOOR * (float(row.std()) or 1.0))

    low, high = float(row.min()), float(row.max())
    target = low if abs(local_mean - low) > abs(high - local_mean) else high
    if abs(target - local_mean) < CONTEXT_SIGMAS * sigma:
        # no value of the global range is far enough, leave it by the smallest step
        sign = -1.0 if target < local_mean else 1.0
        target = local_mean + sign * CONTEXT_SIGMAS * sigma

    values = series.values.copy()
    values[dim, index] = target
    labels = series.labels_or_zeros()
    labels[index] = 1
    return series.replace(values=values, labels=labels)


def square_wave(length: int, period: int) -> np.ndarray:
    half = max(1, period // 2)
    return np.where((np.arange(length) // half) % 2 == 0, 1.0, -1.0)


def _shapelet(series, span, params, dim) -> TimeSeries:
    start, length = validate_span(span, series.length)
    segment = series.values[dim, start : start + length]
    period = int(params.get("period", max(2, length // 2)))

    wave = square_wave(length, period)
    spread = float(wave.std())
    wave = (wave - wave.mean()) / spread if spread > 0 else wave - wave.mean()
    scale = float(segment.std())
    if scale == 0:
        scale = float(series.values[dim].std()) or 1.0

    values = series.values.copy()
    values[dim, start : start + length] = float(segment.mean()) + scale * wave
    labels = series.labels_or_zeros()
    labels[start : start + length] = 1
    return series.replace(values=values, labels=labels)


def inject_taxonomy(series: TimeSeries, kind, where, params: dict | None = None, rng=0) -> TimeSeries:
    """Inject one anomaly of the taxonomy

    :param series: Series to alter
    :param kind: :py:class:`~tfad.synth.anomalykind.AnomalyKind` or its name
    :param where: Index for point kinds, ``(start, length)`` span for subsequence kinds
    :param params: Kind parameters, see the module documentation
    :param rng: Seed or generator (dimension choice, tie breaking)
    :return: New series, labeled on the modified point or span
    :raises UnknownKind: When ``kind`` is not a taxonomy kind
    """
    member = AnomalyKind.parse(kind)
    if member is None:
        raise UnknownKind(f"Unknown anomaly kind '{kind}'")
    params = params or {}
    gen = as_rng(rng)
    dim = _dimension(series, params, gen)

    if member == AnomalyKind.GLOBAL_POINT:
        return _global_point(series, _index(series, where), params, dim, gen)
    if member == AnomalyKind.CONTEXT_POINT:
        return _context_point(series, _index(series, where), params, dim)
    if member == AnomalyKind.SHAPELET:
        return _shapelet(series, where, params, dim)
    if member == AnomalyKind.SEASONAL:
        return inject_freq_anomaly(series, where, FreqMode.SHIFT_PEAK, float(params.get("shift", 2)), gen, dims=[dim])

    start, length = validate_span(where, series.length)
    slope = params.get("slope")
    if slope is None:
        scale = float(series.values[dim].std()) or 1.0
        slope = 3.0 * scale / length
    return inject_slow_slope(series, (start, length), float(slope), dims=[dim])
