# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import logging

import numpy as np

from ..detect.scoring import vote_arrays
from ..errors import LengthMismatch, NoLabeledValidation
from ..models.timeseries import TimeSeries
from ..models.windowspec import WindowSpec
from .evalreport import EvalReport
from .metrics import confusion_counts, point_adjust

logger = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.5


def candidate_thresholds(probs: np.ndarray) -> np.ndarray:
    """Midpoints between consecutive distinct scores, and 0.5, sorted"""
    distinct = np.unique(probs)
    midpoints = (distinct[1:] + distinct[:-1]) / 2.0
    return np.unique(np.concatenate((midpoints, [DEFAULT_THRESHOLD])))


def select_threshold(window_scores, truths, spec: WindowSpec) -> tuple[float, EvalReport]:
    """Pick the window threshold maximizing the pooled point adjusted F1 on validation series

    :param window_scores: Per series ``(start, probability)`` lists
    :param truths: Per series ground truth, a label sequence, a labeled
        :py:class:`~tfad.models.timeseries.TimeSeries` or ``None`` for an unlabeled series
    :param spec: Window geometry of the scores
    :return: The threshold and its report. Ties go to the larger threshold
    :raises NoLabeledValidation: When no series is labeled or no point is anomalous
    """
    labeled = []
    for scores, truth in zip(window_scores, truths, strict=True):
        if isinstance(truth, TimeSeries):
            truth = truth.labels
        if truth is None:
            continue
        truth = (np.asarray(truth).reshape(-1) != 0).astype(np.int8)
        if scores:
            starts, probs = (np.asarray(column) for column in zip(*scores))
            if starts.max() + spec.full_len > truth.size:
                raise LengthMismatch(f"Window scores reach past the {truth.size} labeled points")
        else:
            starts, probs = np.zeros(0, dtype=np.int64), np.zeros(0)
        labeled.append((starts, probs, truth))

    if not labeled or not any(truth.any() for _, _, truth in labeled):
        raise NoLabeledValidation("Threshold selection needs labeled validation series with anomalies")

    all_probs = np.concatenate([probs for _, probs, _ in labeled])
    best: EvalReport | None = None
    for threshold in candidate_thresholds(all_probs):
        tp = fp = fn = 0
        for starts, probs, truth in labeled:
            pred = vote_arrays(starts, probs, threshold, spec, truth.size)
            counts = confusion_counts(point_adjust(pred, truth), truth)
            tp, fp, fn = tp + counts[0], fp + counts[1], fn + counts[2]
        report = EvalReport.from_counts(tp, fp, fn, threshold)
        # ascending sweep, >= keeps the larger threshold on ties
        if best is None or report.f1 >= best.f1:
            best = report

    logger.debug("Selected threshold %.6g (F1 %.4f, P %.4f, R %.4f)", best.threshold, best.f1, best.precision, best.recall)
    return best.threshold, best
