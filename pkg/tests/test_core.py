# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.errors import (
    EmptySeries,
    InvalidLabelValue,
    InvalidParameter,
    LabelLengthMismatch,
    NonFiniteSample,
)
from tfad.models.rngseed import RngSeed, as_rng
from tfad.models.timeseries import TimeSeries, validate_series
from tfad.models.windowpair import WindowPair
from tfad.models.windowspec import WindowSpec
from tfad.nn.branch import Branch


def test_validate_accepts_well_formed_series():
    series = TimeSeries("a", [1.0, 2.0, 3.0, 4.0])
    assert validate_series(series) is series
    assert series.dims == 1
    assert series.length == 4
    assert not series.has_labels


def test_validate_reports_nan_position():
    values = np.ones((2, 5))
    values[1, 3] = np.nan
    with pytest.raises(NonFiniteSample) as info:
        validate_series(TimeSeries("a", values))
    assert info.value.position == (1, 3)


def test_validate_rejects_infinity():
    with pytest.raises(NonFiniteSample):
        validate_series(TimeSeries("a", [1.0, np.inf]))


def test_validate_rejects_short_labels():
    with pytest.raises(LabelLengthMismatch):
        validate_series(TimeSeries("a", [1.0, 2.0, 3.0, 4.0], [0, 1, 0]))


def test_validate_rejects_empty_series():
    with pytest.raises(EmptySeries):
        validate_series(TimeSeries("a", np.zeros((1, 0))))


def test_labels_must_be_binary():
    with pytest.raises(InvalidLabelValue):
        TimeSeries("a", [1.0, 2.0], [0, 2])


def test_series_is_read_only():
    series = TimeSeries("a", [1.0, 2.0], [0, 1])
    with pytest.raises(ValueError):
        series.values[0, 0] = 5.0
    copy = series.labels_or_zeros()
    copy[0] = 1
    assert series.labels[0] == 0


def test_window_spec_full_len():
    spec = WindowSpec(4, 2, 3)
    assert spec.full_len == 6
    assert spec.with_stride(1) == WindowSpec(4, 2, 1)
    with pytest.raises(InvalidParameter):
        WindowSpec(0, 2)


def test_window_pair_context_is_prefix():
    full = np.arange(12, dtype=float).reshape(2, 6)
    pair = WindowPair(full, 4, 1, 10, "s")
    np.testing.assert_array_equal(pair.context, full[:, :4])
    np.testing.assert_array_equal(pair.suspect, full[:, 4:])
    assert pair.suspect_len == 2
    assert pair.relabel(0).label == 0


def test_rng_seed_streams_are_reproducible():
    a = RngSeed(7).generator(3, 1).normal(size=5)
    b = RngSeed(7).generator(3, 1).normal(size=5)
    c = RngSeed(7).generator(3, 2).normal(size=5)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, c)
    assert RngSeed(7).derive(1) == RngSeed(7).derive(1)


@pytest.mark.parametrize("seed", [-1, 2**64, 1.5, True])
def test_rng_seed_range(seed):
    with pytest.raises(InvalidParameter):
        RngSeed(seed)


def test_as_rng_passes_generators_through():
    gen = np.random.default_rng(0)
    assert as_rng(gen) is gen


def test_enum_parse_is_case_insensitive():
    assert Branch.parse("TIME_TREND") == Branch.TIME_TREND
    assert Branch.parse("unknown") is None
    assert Branch.FREQ_RESIDUAL.is_frequency
    assert Branch.FREQ_RESIDUAL.is_residual
    assert not Branch.TIME_TREND.is_residual
