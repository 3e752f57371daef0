# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import math

import numpy as np

from ..errors import InvalidParameter, SpanOutOfRange

_INTS = (int, np.integer)
_REALS = (int, float, np.integer, np.floating)


def validate_positive_int(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, _INTS):
        raise InvalidParameter(f"{name} must be an integer number")
    if value < 1:
        raise InvalidParameter(f"{name} must be a positive integer, got {value}")
    return int(value)


def validate_ratio(value: float, name: str) -> float:
    if not isinstance(value, _REALS) or not 0.0 <= value <= 1.0:
        raise InvalidParameter(f"{name} must be in range 0 to 1, got {value}")
    return float(value)


def validate_finite(value: float, name: str) -> float:
    if not isinstance(value, _REALS) or not math.isfinite(value):
        raise InvalidParameter(f"{name} must be a finite number, got {value}")
    return float(value)


def validate_span(span: tuple[int, int], length: int, name: str = "span") -> tuple[int, int]:
    """Check that ``span = (start, len)`` lies inside ``[0, length)``

    :return: The span as a tuple of two ``int``
    :raises SpanOutOfRange: When the span is empty or exceeds the series
    """
    start, span_len = int(span[0]), int(span[1])
    if span_len < 1 or start < 0 or start + span_len > length:
        raise SpanOutOfRange(f"{name} ({start}, {span_len}) out of range for length {length}")
    return start, span_len
