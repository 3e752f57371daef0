# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.evaluation.metrics`

Point adjusted precision, recall and F1. A true anomaly segment is a maximal run of 1 in the
ground truth; when any of its points is predicted, the whole segment counts as detected.
"""

import numpy as np

from ..errors import LengthMismatch


def _binary(values) -> np.ndarray:
    return (np.asarray(values).reshape(-1) != 0).astype(np.int8)


def _check(pred, truth) -> tuple[np.ndarray, np.ndarray]:
    pred, truth = _binary(pred), _binary(truth)
    if pred.shape != truth.shape:
        raise LengthMismatch(f"Prediction has {pred.size} points, ground truth has {truth.size}")
    return pred, truth


def segments(truth) -> list[tuple[int, int]]:
    """``(start, end)`` (end excluded) of every maximal run of 1"""
    edges = np.flatnonzero(np.diff(np.concatenate(([0], _binary(truth), [0]))))
    return [(int(s), int(e)) for s, e in zip(edges[0::2], edges[1::2])]


def point_adjust(pred, truth) -> np.ndarray:
    """Extend every hit to the whole true segment it falls in

    :raises LengthMismatch: When the sequences differ in length
    """
    pred, truth = _check(pred, truth)
    adjusted = pred.copy()
    for start, end in segments(truth):
        if adjusted[start:end].any():
            adjusted[start:end] = 1
    return adjusted


def confusion_counts(pred, truth) -> tuple[int, int, int]:
    """``(TP, FP, FN)`` of a prediction, without adjustment"""
    pred, truth = _check(pred, truth)
    tp = int(np.sum(pred & truth))
    fp = int(np.sum(pred & (1 - truth)))
    fn = int(np.sum((1 - pred) & truth))
    return tp, fp, fn


def rates(tp: int, fp: int, fn: int) -> tuple[float, float, float]:
    """Precision, recall and F1 from counts

    Precision is 1 when nothing is predicted and nothing is anomalous, 0 when nothing is predicted
    but anomalies exist. Recall is 1 when nothing is anomalous. F1 is 0 when both rates are 0.
    """
    if tp + fp == 0:
        precision = 1.0 if tp + fn == 0 else 0.0
    else:
        precision = tp / (tp + fp)
    recall = 1.0 if tp + fn == 0 else tp / (tp + fn)
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return precision, recall, f1


def prf1(pred, truth) -> tuple[float, float, float]:
    """Point adjusted precision, recall and F1

    :raises LengthMismatch: When the sequences differ in length
    """
    pred, truth = _check(pred, truth)
    return rates(*confusion_counts(point_adjust(pred, truth), truth))
