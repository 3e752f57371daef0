# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np

from ..errors import SeriesShorterThanWindow
from ..models.timeseries import TimeSeries
from ..models.windowpair import WindowPair
from ..models.windowspec import WindowSpec


def window_starts(length: int, spec: WindowSpec) -> np.ndarray:
    """Starts ``0, stride, 2 * stride, ...`` of the full windows that fit in ``length`` samples"""
    if length < spec.full_len:
        raise SeriesShorterThanWindow(f"Series has {length} samples, a full window needs {spec.full_len}")
    return np.arange(0, length - spec.full_len + 1, spec.stride)


def split_windows(series: TimeSeries, spec: WindowSpec) -> list[WindowPair]:
    """Slide the full window over the series

    :param series: Source series, labeled or not
    :param spec: Window geometry
    :return: One pair per start, labeled 1 when a point of its suspect span is labeled 1
    :raises SeriesShorterThanWindow: When ``T < full_len``
    """
    starts = window_starts(series.length, spec)
    labels = series.labels_or_zeros()
    # anomalies in [start + context_len, start + full_len)
    cumulative = np.concatenate(([0], np.cumsum(labels, dtype=np.int64)))
    suspect_hits = cumulative[starts + spec.full_len] - cumulative[starts + spec.context_len]

    return [
        WindowPair(
            series.values[:, start : start + spec.full_len],
            spec.context_len,
            int(hits > 0),
            int(start),
            series.id,
        )
        for start, hits in zip(starts, suspect_hits)
    ]
