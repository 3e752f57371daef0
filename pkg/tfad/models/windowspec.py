# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from .utils import validate_positive_int


class WindowSpec:
    """Geometry of the sliding windows

    :param int context_len: Length of the context window (the reference, assumed normal)
    :param int suspect_len: Length of the suspect window tested for anomalies
    :param int stride: Distance between the starts of two consecutive full windows

    The full window is the context window followed by the suspect window::

        |<------------- full_len ------------->|
        |<---- context_len ---->|<-suspect_len->|
    """

    def __init__(self, context_len: int = 96, suspect_len: int = 24, stride: int = 1):
        self._context_len = validate_positive_int(context_len, "context_len")
        self._suspect_len = validate_positive_int(suspect_len, "suspect_len")
        self._stride = validate_positive_int(stride, "stride")

    @property
    def context_len(self) -> int:
        return self._context_len

    @property
    def suspect_len(self) -> int:
        return self._suspect_len

    @property
    def stride(self) -> int:
        return self._stride

    @property
    def full_len(self) -> int:
        """Full window length, ``context_len + suspect_len``"""
        return self._context_len + self._suspect_len

    def with_stride(self, stride: int) -> "WindowSpec":
        return WindowSpec(self._context_len, self._suspect_len, stride)

    def __eq__(self, other) -> bool:
        return isinstance(other, WindowSpec) and (self.context_len, self.suspect_len, self.stride) == (
            other.context_len,
            other.suspect_len,
            other.stride,
        )

    def __hash__(self) -> int:
        return hash((self._context_len, self._suspect_len, self._stride))

    def __repr__(self) -> str:
        return f"WindowSpec(context_len={self._context_len}, suspect_len={self._suspect_len}, stride={self._stride})"
