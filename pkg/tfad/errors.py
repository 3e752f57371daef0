# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.errors`

All the errors raised by the library. Every error has a ``category`` that the command line
front end uses to pick the message prefix and the exit code.
"""

INPUT = "input"
NUMERIC = "numeric"
MODEL = "model"
CONFIG = "config"


class TfadError(Exception):
    """Base class of every library error"""

    category = INPUT


class InvalidParameter(TfadError, ValueError):
    """An argument is outside its allowed range"""


# -- core --


class EmptySeries(TfadError):
    """A time series without dimensions or without timestamps"""


class NonFiniteSample(TfadError):
    """A sample is NaN or infinite

    :param position: ``(dimension, timestamp)`` of the first offending sample
    """

    def __init__(self, position, message: str | None = None):
        self.position = tuple(position)
        super().__init__(message or f"Non finite sample at dimension {self.position[0]}, timestamp {self.position[1]}")


class LabelLengthMismatch(TfadError):
    """Labels and samples have a different number of timestamps"""


class InvalidLabelValue(TfadError):
    """A label is not 0 or 1"""


# -- decompose / spectral --


class SeriesTooShort(TfadError):
    category = NUMERIC


class NegativeLambda(TfadError, ValueError):
    category = NUMERIC


class EmptyWindow(TfadError):
    category = NUMERIC


class AsymmetricSpectrum(TfadError):
    """The spectrum is not conjugate symmetric, so its inverse is not real"""

    category = NUMERIC


# -- augment --


class IndexOutOfRange(TfadError, IndexError):
    pass


class SpanOutOfRange(TfadError, IndexError):
    pass


class SpanLengthMismatch(TfadError):
    pass


class SpanTooShort(TfadError):
    pass


class DimensionMismatch(TfadError):
    pass


class NoMethodsEnabled(TfadError):
    category = CONFIG


# -- nn --


class ChannelMismatch(TfadError):
    category = MODEL


class NoForwardRecorded(TfadError):
    category = MODEL


class EmptyTrainingSet(TfadError):
    category = MODEL


class CheckpointFormatError(TfadError):
    category = MODEL


# -- detect / eval --


class SeriesShorterThanWindow(TfadError):
    pass


class LengthMismatch(TfadError):
    pass


class NoLabeledValidation(TfadError):
    pass


# -- synth --


class InvalidOmega(TfadError, ValueError):
    pass


class UnknownKind(TfadError, ValueError):
    pass


class TooFewSeries(TfadError):
    pass


# -- cli --


class ParseError(TfadError):
    """A dataset file cannot be parsed

    :param line: Line (CSV) or record (NDJSON) number, starting from 1
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonMonotonicTimestamps(TfadError):
    pass


class ConfigError(TfadError):
    category = CONFIG
