# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.detect.scoring`

Sliding window scoring and point labeling by majority vote. A window is flagged when its score
is above the threshold, a point is anomalous when strictly more than half of the suspect windows
covering it are flagged. Points covered by no suspect window are normal.
"""

import logging

import numpy as np

from ..errors import InvalidParameter
from ..models.timeseries import TimeSeries
from ..models.windowspec import WindowSpec
from ..nn.tfadmodel import TfadModel
from .windows import window_starts

logger = logging.getLogger(__name__)

CHUNK = 1024


def score_series(
    model: TfadModel, series: TimeSeries, spec: WindowSpec, lam: float | None = None, batch_size: int = 256
) -> list[tuple[int, float]]:
    """Score every full window of the series

    :param model: Scoring model
    :param series: Series to scan
    :param spec: Window geometry
    :param lam: HP multiplier, the model one by default
    :return: ``(start, probability)`` of every window, by increasing start
    :raises SeriesShorterThanWindow: When ``T < full_len``
    """
    starts = window_starts(series.length, spec)
    offsets = np.arange(spec.full_len)
    scores = np.empty(starts.size)

    for first in range(0, starts.size, CHUNK):
        chunk = starts[first : first + CHUNK]
        # (windows, D, full_len)
        full = series.values[:, chunk[:, None] + offsets].transpose(1, 0, 2)
        inputs = model.prepare_arrays(full, spec.context_len, lam)
        scores[first : first + chunk.size] = model.predict_inputs(inputs, batch_size)

    logger.debug("Scored %d windows of '%s'", starts.size, series.id)
    return [(int(s), float(p)) for s, p in zip(starts, scores)]


def _check_threshold(threshold: float) -> float:
    threshold = float(threshold)
    if not 0.0 < threshold < 1.0:
        raise InvalidParameter(f"Threshold must be in range (0, 1), got {threshold}")
    return threshold


def coverage_counts(starts: np.ndarray, flags: np.ndarray, spec: WindowSpec, length: int) -> tuple[np.ndarray, np.ndarray]:
    """Per point, the number of suspect parts covering it and how many of them are flagged"""
    covered = np.zeros(length + 1, dtype=np.int64)
    flagged = np.zeros(length + 1, dtype=np.int64)
    first = starts + spec.context_len
    last = starts + spec.full_len
    np.add.at(covered, first, 1)
    np.add.at(covered, last, -1)
    np.add.at(flagged, first[flags], 1)
    np.add.at(flagged, last[flags], -1)
    return np.cumsum(covered)[:length], np.cumsum(flagged)[:length]


def vote_arrays(starts: np.ndarray, probs: np.ndarray, threshold: float, spec: WindowSpec, length: int) -> np.ndarray:
    """Array form of :py:func:`vote_point_labels`"""
    covered, flagged = coverage_counts(np.asarray(starts, dtype=np.int64), np.asarray(probs) > threshold, spec, length)
    return (2 * flagged > covered).astype(np.int8)


def vote_point_labels(scores, threshold: float, spec: WindowSpec, length: int) -> np.ndarray:
    """Point labels from window scores

    :param scores: ``(start, probability)`` pairs, as returned by :py:func:`score_series`
    :param threshold: Flagging threshold in ``(0, 1)``, a window is flagged when its score is above it
    :param spec: Window geometry used for the scores
    :param length: Number of points T of the series
    :return: ``T`` labels 0/1
    """
    threshold = _check_threshold(threshold)
    if len(scores) == 0:
        return np.zeros(length, dtype=np.int8)
    starts, probs = (np.asarray(column) for column in zip(*scores))
    return vote_arrays(starts, probs, threshold, spec, length)


class ScoreSeries:
    """Detection result of one series

    :param str series_id: Identifier of the scored series
    :param window_scores: ``(start, probability)`` of every window
    :param point_labels: ``T`` labels from the majority vote
    :param float threshold: Window flagging threshold
    """

    def __init__(self, series_id: str, window_scores, point_labels, threshold: float):
        probs = np.array([p for _, p in window_scores], dtype=np.float64)
        if probs.size and not np.all((probs > 0.0) & (probs < 1.0)):
            raise InvalidParameter("Window scores must be in range (0, 1)")
        self._series_id = series_id
        self._window_scores = [(int(s), float(p)) for s, p in window_scores]
        self._point_labels = np.asarray(point_labels, dtype=np.int8)
        self._point_labels.setflags(write=False)
        self._threshold = _check_threshold(threshold)

    @property
    def series_id(self) -> str:
        return self._series_id

    @property
    def window_scores(self) -> list[tuple[int, float]]:
        return self._window_scores

    @property
    def point_labels(self) -> np.ndarray:
        return self._point_labels

    @property
    def threshold(self) -> float:
        return self._threshold

    @property
    def anomaly_count(self) -> int:
        return int(self._point_labels.sum())

    def __repr__(self) -> str:
        return (
            f"ScoreSeries(series_id={self._series_id!r}, windows={len(self._window_scores)}, "
            f"threshold={self._threshold:g}, anomalies={self.anomaly_count})"
        )


def detect_series(model: TfadModel, series: TimeSeries, spec: WindowSpec, threshold: float) -> ScoreSeries:
    """Score the windows of a series and vote the point labels"""
    scores = score_series(model, series, spec)
    return ScoreSeries(series.id, scores, vote_point_labels(scores, threshold, spec, series.length), threshold)
