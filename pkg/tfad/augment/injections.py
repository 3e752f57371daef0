# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.augment.injections`

Anomaly injections. Every operation returns a new series whose labels are the input labels
with the modified span (or point) set to 1. Spans are ``(start, length)`` tuples.
"""

import math

import numpy as np

from ..errors import DimensionMismatch, IndexOutOfRange, InvalidParameter, SpanLengthMismatch, SpanTooShort
from ..models.rngseed import as_rng
from ..models.timeseries import TimeSeries
from ..models.utils import validate_finite, validate_span
from ..signal.spectral import SpectralVector, idft
from .freqmode import FreqMode

NEAR_ZERO = 1e-6
"""Samples below ``NEAR_ZERO * RMS`` are offset instead of multiplied"""

MIN_FREQ_SPAN = 4


def _rms(row: np.ndarray) -> float:
    rms = float(np.sqrt(np.mean(row**2)))
    return rms if rms > 0 else 1.0


def _check_dims(dims, count: int) -> list[int]:
    if dims is None:
        return list(range(count))
    dims = sorted({int(d) for d in dims})
    if not dims:
        raise InvalidParameter("At least one dimension must be selected")
    if dims[0] < 0 or dims[-1] >= count:
        raise DimensionMismatch(f"Dimensions {dims} out of range for a series with {count} dimensions")
    return dims


def _labeled(series: TimeSeries, values: np.ndarray, start: int, length: int) -> TimeSeries:
    labels = series.labels_or_zeros()
    labels[start : start + length] = 1
    return series.replace(values=values, labels=labels)


def inject_point_anomaly(series: TimeSeries, index: int, factor: float, rng, dim: int | None = None) -> TimeSeries:
    """Scale one sample

    :param index: Timestamp of the sample
    :param factor: Multiplier. A sample with ``|x| < 1e-6 * RMS`` is offset by ``factor * RMS`` instead,
        the RMS of the dimension falls back to 1 when the dimension is all zeros
    :param rng: Picks the dimension of a multivariate series when ``dim`` is not given
    :raises IndexOutOfRange: When ``index`` is not a timestamp of the series
    """
    index = int(index)
    if not 0 <= index < series.length:
        raise IndexOutOfRange(f"Index {index} out of range for length {series.length}")
    factor = validate_finite(factor, "factor")

    if dim is None:
        dim = 0 if series.dims == 1 else int(as_rng(rng).integers(series.dims))
    elif not 0 <= dim < series.dims:
        raise DimensionMismatch(f"Dimension {dim} out of range for a series with {series.dims} dimensions")

    values = series.values.copy()
    x = values[dim, index]
    rms = _rms(values[dim])
    if abs(x) < NEAR_ZERO * rms:
        values[dim, index] = x + factor * rms
    else:
        values[dim, index] = x * factor

    return _labeled(series, values, index, 1)


def inject_exchange(series: TimeSeries, span_a, span_b, donor: TimeSeries | None = None) -> TimeSeries:
    """Replace ``span_a`` of the series with ``span_b`` of the donor (the series itself by default)

    :raises SpanOutOfRange: When a span does not fit its series
    :raises SpanLengthMismatch: When the spans differ in length or the donor is too short
    """
    donor = series if donor is None else donor
    if donor.dims != series.dims:
        raise DimensionMismatch(f"Donor has {donor.dims} dimensions, series has {series.dims}")

    a_start, length = validate_span(span_a, series.length, "span_a")
    if int(span_b[1]) != length:
        raise SpanLengthMismatch(f"Spans have different lengths ({length} and {int(span_b[1])})")
    if donor.length < length:
        raise SpanLengthMismatch(f"Donor '{donor.id}' has {donor.length} samples, span needs {length}")
    b_start, _ = validate_span(span_b, donor.length, "span_b")

    values = series.values.copy()
    values[:, a_start : a_start + length] = donor.values[:, b_start : b_start + length]
    return _labeled(series, values, a_start, length)


def inject_mixup(a: TimeSeries, b: TimeSeries, alpha: float, span) -> TimeSeries:
    """Blend ``alpha * a + (1 - alpha) * b`` inside the span, ``a`` elsewhere

    The span is labeled only when ``alpha < 1``.
    """
    if a.dims != b.dims:
        raise DimensionMismatch(f"Cannot mix {a.dims} and {b.dims} dimensions")
    alpha = validate_finite(alpha, "alpha")
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameter(f"alpha must be in range 0 to 1, got {alpha}")
    start, length = validate_span(span, a.length)
    validate_span(span, b.length)

    if alpha == 1.0:
        return a.replace(labels=a.labels_or_zeros())

    values = a.values.copy()
    end = start + length
    values[:, start:end] = alpha * a.values[:, start:end] + (1.0 - alpha) * b.values[:, start:end]
    return _labeled(a, values, start, length)


def dominant_bins(spectrum: np.ndarray, count: int, gen: np.random.Generator) -> list[int]:
    """The ``count`` largest bins among ``1 .. floor((N-1)/2)``, ties broken at random"""
    n = spectrum.shape[-1]
    bins = np.arange(1, (n - 1) // 2 + 1)
    magnitude = np.abs(spectrum[bins])
    order = np.lexsort((gen.random(bins.size), -np.round(magnitude, 12)))
    return [int(k) for k in bins[order[:count]]]


def _set_pair(spectrum: np.ndarray, k: int, value: complex):
    spectrum[k] = value
    spectrum[spectrum.shape[-1] - k] = np.conj(value)


def apply_freq_mode(spectrum: np.ndarray, mode: FreqMode, magnitude: float, gen: np.random.Generator) -> np.ndarray:
    """Apply a bin operation to a conjugate symmetric spectrum, keeping the symmetry"""
    out = spectrum.copy()
    n = out.shape[-1]
    half = (n - 1) // 2

    if mode == FreqMode.SCALE_BIN:
        (k,) = dominant_bins(out, 1, gen)
        _set_pair(out, k, out[k] * (1.0 + magnitude))
    elif mode == FreqMode.ZERO_BIN:
        for k in dominant_bins(out, max(1, math.ceil(magnitude)), gen):
            _set_pair(out, k, 0.0)
    elif mode == FreqMode.SHIFT_PEAK:
        shift = math.ceil(magnitude)
        (k,) = dominant_bins(out, 1, gen)
        target = k + shift
        if not 1 <= target <= half:
            target = k - shift
        if not 1 <= target <= half:
            target = min(max(k + shift, 1), half)
        if target == k and half > 1:
            # the peak sits at the clipped edge, move it to the neighbouring bin
            target = k - 1 if k > 1 else k + 1
        peak, other = out[k], out[target]
        _set_pair(out, target, peak)
        _set_pair(out, k, other)
    else:
        raise InvalidParameter(f"Unknown frequency mode '{mode}'")

    return out


def inject_freq_anomaly(series: TimeSeries, span, mode, magnitude: float, rng, dims=None) -> TimeSeries:
    """Alter the spectrum of a span

    :param span: ``(start, length)`` with ``length >= 4``
    :param mode: :py:class:`~tfad.augment.freqmode.FreqMode` or its name
    :param magnitude: ``scale_bin``: the dominant bin pair is multiplied by ``1 + magnitude``.
        ``zero_bin``: the ``max(1, ceil(magnitude))`` dominant pairs are zeroed.
        ``shift_peak``: the dominant pair is swapped with the pair ``ceil(magnitude)`` bins away
        (reflected when it falls outside ``1 .. floor((N-1)/2)``)
    :param rng: Breaks ties between bins of equal magnitude
    :param dims: Dimensions to alter, ``None`` for all
    :raises SpanTooShort: When the span is shorter than 4 samples
    """
    start, length = validate_span(span, series.length)
    if length < MIN_FREQ_SPAN:
        raise SpanTooShort(f"Frequency injection needs a span of at least {MIN_FREQ_SPAN} samples, got {length}")
    freq_mode = FreqMode.parse(mode)
    if freq_mode is None:
        raise InvalidParameter(f"Unknown frequency mode '{mode}'")
    magnitude = validate_finite(magnitude, "magnitude")

    gen = as_rng(rng)
    values = series.values.copy()
    end = start + length
    for d in _check_dims(dims, series.dims):
        spectrum = np.fft.fft(values[d, start:end])
        altered = apply_freq_mode(spectrum, freq_mode, magnitude, gen)
        values[d, start:end] = idft(SpectralVector.from_complex(altered))

    return _labeled(series, values, start, length)


def inject_slow_slope(series: TimeSeries, span, slope: float, dims=None) -> TimeSeries:
    """Add the ramp ``0, slope, 2 * slope, ...`` across the span

    :param dims: Dimensions receiving the ramp, ``None`` for all
    """
    start, length = validate_span(span, series.length)
    slope = validate_finite(slope, "slope")
    dims = _check_dims(dims, series.dims)

    if slope == 0.0:
        return series.replace(labels=series.labels_or_zeros())

    values = series.values.copy()
    values[dims, start : start + length] += slope * np.arange(length)
    return _labeled(series, values, start, length)
