# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np

from ..errors import InvalidParameter


class WindowPair:
    """A full window and its context window

    :param full: Full window samples, shape ``D x full_len``
    :param int context_len: Length of the context prefix
    :param int label: 1 when the suspect span contains an anomalous (or injected) point
    :param int start: Offset of the full window in the source series
    :param str source_id: Identifier of the source series

    The context window is always the first ``context_len`` columns of the full window.
    """

    def __init__(self, full, context_len: int, label: int, start: int, source_id: str):
        full = np.array(full, dtype=np.float64)
        if full.ndim == 1:
            full = full.reshape(1, -1)
        if not 0 < context_len < full.shape[1]:
            raise InvalidParameter(f"context_len {context_len} must be in range 1 to {full.shape[1] - 1}")
        if label not in (0, 1):
            raise InvalidParameter(f"Window label must be 0 or 1, got {label}")
        full.setflags(write=False)

        self._full = full
        self._context_len = int(context_len)
        self._label = int(label)
        self._start = int(start)
        self._source_id = str(source_id)

    @property
    def full(self) -> np.ndarray:
        """Full window ``D x full_len``"""
        return self._full

    @property
    def context(self) -> np.ndarray:
        """Context window ``D x context_len``, the prefix of :py:attr:`full`"""
        return self._full[:, : self._context_len]

    @property
    def suspect(self) -> np.ndarray:
        """Suspect window ``D x suspect_len``, the suffix of :py:attr:`full`"""
        return self._full[:, self._context_len :]

    @property
    def context_len(self) -> int:
        return self._context_len

    @property
    def suspect_len(self) -> int:
        return self._full.shape[1] - self._context_len

    @property
    def full_len(self) -> int:
        return self._full.shape[1]

    @property
    def dims(self) -> int:
        return self._full.shape[0]

    @property
    def label(self) -> int:
        return self._label

    @property
    def start(self) -> int:
        return self._start

    @property
    def source_id(self) -> str:
        return self._source_id

    def relabel(self, label: int) -> "WindowPair":
        return WindowPair(self._full, self._context_len, label, self._start, self._source_id)

    def __repr__(self) -> str:
        return (
            f"WindowPair(source_id={self._source_id!r}, start={self._start}, "
            f"full_len={self.full_len}, context_len={self._context_len}, label={self._label})"
        )
