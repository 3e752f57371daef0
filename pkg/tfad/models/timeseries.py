# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`TimeSeries`
"""

import numpy as np

from ..errors import EmptySeries, InvalidLabelValue, LabelLengthMismatch, NonFiniteSample


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


class TimeSeries:
    """A uniformly sampled multivariate time series with optional point labels

    :param str id: Series identifier
    :param values: Samples, shape ``D x T``. A one dimensional sequence is read as ``D = 1``
    :param labels: Optional ``T`` long sequence of 0/1 (1 = anomalous point)

    The time step is implicit: sample ``t`` is the ``t``-th column. Instances are immutable,
    ``values`` and ``labels`` are read-only arrays. Use :py:func:`validate_series` to check
    the invariants before feeding a series to the numerical modules.
    """

    def __init__(self, id: str, values, labels=None):
        values = np.array(values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(1, -1)
        if values.ndim != 2:
            raise EmptySeries(f"Series '{id}': values must be a D x T matrix, got {values.ndim} dimensions")

        self._id = str(id)
        self._values = _readonly(values)

        if labels is None:
            self._labels = None
        else:
            labels = np.array(labels).reshape(-1)
            if labels.size and not np.all((labels == 0) | (labels == 1)):
                raise InvalidLabelValue(f"Series '{id}': labels must be 0 or 1")
            self._labels = _readonly(labels.astype(np.int8))

    @property
    def id(self) -> str:
        """Series identifier"""
        return self._id

    @property
    def values(self) -> np.ndarray:
        """Samples matrix ``D x T``"""
        return self._values

    @property
    def labels(self) -> np.ndarray | None:
        """Point labels or ``None`` when the series is unlabeled"""
        return self._labels

    @property
    def dims(self) -> int:
        """Number of dimensions D"""
        return self._values.shape[0]

    @property
    def length(self) -> int:
        """Number of timestamps T"""
        return self._values.shape[1]

    @property
    def has_labels(self) -> bool:
        return self._labels is not None

    def labels_or_zeros(self) -> np.ndarray:
        """Writable copy of the labels, all zeros for an unlabeled series"""
        if self._labels is None:
            return np.zeros(self.length, dtype=np.int8)
        return self._labels.copy()

    def replace(self, values=None, labels=None, id: str | None = None) -> "TimeSeries":
        """Return a new series with some fields replaced"""
        return TimeSeries(
            self._id if id is None else id,
            self._values if values is None else values,
            self._labels if labels is None else labels,
        )

    def __len__(self) -> int:
        return self.length

    def __repr__(self) -> str:
        labeled = "labeled" if self.has_labels else "unlabeled"
        return f"TimeSeries(id={self._id!r}, D={self.dims}, T={self.length}, {labeled})"


def validate_series(series: TimeSeries) -> TimeSeries:
    """Check the series invariants

    :param series: Series to check
    :return: The same series when all invariants hold
    :raises EmptySeries: When D or T is zero
    :raises LabelLengthMismatch: When the labels are not T long
    :raises NonFiniteSample: On the first NaN/Inf sample, its position is reported
    """
    if series.dims < 1 or series.length < 1:
        raise EmptySeries(f"Series '{series.id}' is empty (D={series.dims}, T={series.length})")

    if series.labels is not None and series.labels.shape[0] != series.length:
        raise LabelLengthMismatch(f"Series '{series.id}': {series.labels.shape[0]} labels for {series.length} timestamps")

    finite = np.isfinite(series.values)
    if not finite.all():
        dim, t = np.argwhere(~finite)[0]
        raise NonFiniteSample((int(dim), int(t)), f"Series '{series.id}': non finite sample at dimension {dim}, timestamp {t}")

    return series
