# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from dataclasses import asdict, dataclass

from .metrics import confusion_counts, point_adjust, rates


@dataclass(frozen=True)
class EvalReport:
    """Point adjusted metrics, the counts are taken after adjustment"""

    precision: float
    recall: float
    f1: float
    threshold: float
    tp: int
    fp: int
    fn: int

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, threshold: float) -> "EvalReport":
        precision, recall, f1 = rates(tp, fp, fn)
        return cls(precision, recall, f1, float(threshold), int(tp), int(fp), int(fn))

    def to_dict(self) -> dict:
        return asdict(self)


def pooled_report(predictions, truths, threshold: float) -> EvalReport:
    """Micro averaged report: adjusted counts are summed over all series

    :param predictions: Point labels of every series
    :param truths: Ground truth of every series, same order
    """
    tp = fp = fn = 0
    for pred, truth in zip(predictions, truths, strict=True):
        counts = confusion_counts(point_adjust(pred, truth), truth)
        tp, fp, fn = tp + counts[0], fp + counts[1], fn + counts[2]
    return EvalReport.from_counts(tp, fp, fn, threshold)
