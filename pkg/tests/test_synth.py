# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.errors import InvalidOmega, TooFewSeries, UnknownKind
from tfad.evaluation.metrics import segments
from tfad.models.timeseries import TimeSeries
from tfad.synth.anomalykind import AnomalyKind
from tfad.synth.benchmark import (
    GAP,
    inject_anomalies,
    make_benchmark,
    seasonal_benchmark,
    split_sizes,
    unseen_kinds_benchmark,
)
from tfad.synth.generator import generate_structural
from tfad.synth.structuralconfig import StructuralConfig
from tfad.synth.taxonomy import inject_taxonomy


def test_no_components_no_noise_is_zero():
    series = generate_structural(StructuralConfig(components=(), length=10), 0)
    np.testing.assert_array_equal(series.values, 0.0)
    np.testing.assert_array_equal(series.labels, 0)


def test_single_component_peaks_at_its_bin():
    series = generate_structural(StructuralConfig(components=((1.0, 0.0, 4.0 / 64.0),), length=64), 0)
    spectrum = np.abs(np.fft.fft(series.values[0]))
    assert int(np.argmax(spectrum[:33])) == 4


def test_trend_schedule():
    cfg = StructuralConfig(components=(), trend=((0, 1.0), (5, -1.0)), length=10)
    np.testing.assert_array_equal(cfg.trend_values(), [0, 1, 2, 3, 4, 5, 4, 3, 2, 1])


def test_trend_leaves_a_sinusoidal_residual():
    cfg = StructuralConfig(components=((2.0, 0.0, 1.0 / 16.0),), trend=((0, 0.1),), length=64)
    series = generate_structural(cfg, 0)
    t = np.arange(64)
    np.testing.assert_allclose(series.values[0] - 0.1 * t, 2.0 * np.sin(2.0 * np.pi * t / 16.0), atol=1e-9)


def test_noise_is_seeded():
    cfg = StructuralConfig(noise_std=0.5, length=50, dims=3)
    a, b = generate_structural(cfg, 4), generate_structural(cfg, 4)
    np.testing.assert_array_equal(a.values, b.values)
    assert a.values.shape == (3, 50)


@pytest.mark.parametrize("period", [4, 16, 25])
def test_noiseless_component_is_periodic(period):
    cfg = StructuralConfig(components=((1.3, 0.7, 1.0 / period),), length=200)
    row = generate_structural(cfg, 0).values[0]
    np.testing.assert_allclose(row[period:], row[:-period], rtol=0, atol=1e-9)


def test_noiseless_mixture_is_periodic_over_the_common_period():
    cfg = StructuralConfig(components=((1.0, 0.0, 1.0 / 8), (0.5, 1.0, 1.0 / 12)), length=200)
    row = generate_structural(cfg, 0).values[0]
    np.testing.assert_allclose(row[24:], row[:-24], rtol=0, atol=1e-9)


@pytest.mark.parametrize("omega", [0.0, 0.6, float("nan")])
def test_invalid_omega(omega):
    with pytest.raises(InvalidOmega):
        StructuralConfig(components=((1.0, 0.0, omega),))


def sine(length: int = 64, period: float = 32.0) -> TimeSeries:
    return TimeSeries("s", np.sin(2.0 * np.pi * np.arange(length) / period))


def test_global_point_leaves_the_range():
    series = sine()
    out = inject_taxonomy(series, "global_point", 10, {"factor": 3.0})
    assert abs(out.values[0, 10]) >= 1.5 * np.max(np.abs(series.values))
    assert out.labels.tolist() == [int(i == 10) for i in range(64)]


def test_context_point_moves_to_far_bound():
    series = sine()
    # the neighbours of a crest sit near the maximum, the far bound is the minimum
    out = inject_taxonomy(series, AnomalyKind.CONTEXT_POINT, 8)
    assert out.values[0, 8] == series.values[0].min()
    assert out.labels[8] == 1
    assert out.labels.sum() == 1


def local_deviation(before, after, index: int, window: int) -> tuple[float, float]:
    neighbours = np.concatenate((before[max(0, index - window) : index], before[index + 1 : index + window + 1]))
    return abs(after[index] - neighbours.mean()), neighbours.std()


@pytest.mark.parametrize("window", [2, 8])
def test_context_point_is_three_sigma_from_its_neighbours(window):
    series = sine(64, 16.0)
    for index in range(64):
        out = inject_taxonomy(series, "context_point", index, {"window": window})
        deviation, sigma = local_deviation(series.values[0], out.values[0], index, window)
        assert deviation >= 3.0 * sigma * (1 - 1e-12), index
        assert out.labels.sum() == 1


def test_context_point_stays_in_range_when_possible():
    series = sine(64, 16.0)
    low, high = series.values[0].min(), series.values[0].max()
    # crests and troughs of the sine, where the opposite bound is far enough
    for index in (4, 12, 20, 28):
        value = inject_taxonomy(series, "context_point", index).values[0, index]
        assert value in (low, high)


def test_context_point_on_a_flat_series_still_moves():
    flat = TimeSeries("flat", np.full(20, 2.0))
    out = inject_taxonomy(flat, "context_point", 10)
    assert out.values[0, 10] == pytest.approx(2.0 + 3.0 * 0.1)


def test_shapelet_keeps_span_moments():
    series = sine()
    out = inject_taxonomy(series, "shapelet", (20, 16), {"period": 4})
    before, after = series.values[0, 20:36], out.values[0, 20:36]
    assert after.mean() == pytest.approx(before.mean(), abs=1e-9)
    assert after.std() == pytest.approx(before.std(), rel=1e-9)
    assert set(np.round(after - after.mean(), 9)) <= {round(before.std(), 9), round(-before.std(), 9)}
    assert segments(out.labels) == [(20, 36)]


def test_seasonal_and_trend_label_their_span():
    series = sine(128)
    for kind in ("seasonal", "trend"):
        out = inject_taxonomy(series, kind, (40, 32))
        assert segments(out.labels) == [(40, 72)]
        np.testing.assert_array_equal(out.values[0, :40], series.values[0, :40])
        assert not np.allclose(out.values[0, 40:72], series.values[0, 40:72])


def test_trend_default_slope():
    series = sine(128)
    out = inject_taxonomy(series, "trend", (40, 32))
    ramp = out.values[0, 40:72] - series.values[0, 40:72]
    slope = 3.0 * series.values[0].std() / 32
    np.testing.assert_allclose(ramp, slope * np.arange(32), atol=1e-12)


def test_unknown_kind():
    with pytest.raises(UnknownKind):
        inject_taxonomy(sine(), "sawtooth", 3)


@pytest.mark.parametrize("n_series, sizes", [(3, (1, 1, 1)), (4, (1, 1, 2)), (10, (3, 2, 5)), (20, (6, 4, 10))])
def test_split_sizes(n_series, sizes):
    assert split_sizes(n_series) == sizes


def test_too_few_series():
    with pytest.raises(TooFewSeries):
        make_benchmark(n_series=2)


def test_benchmark_is_deterministic():
    a = make_benchmark(n_series=5, length=400, rng=3)
    b = make_benchmark(n_series=5, length=400, rng=3)
    for x, y in zip(a.all(), b.all()):
        assert x.id == y.id
        np.testing.assert_array_equal(x.values, y.values)
        np.testing.assert_array_equal(x.labels, y.labels)
    assert [s.id for s in a.train] == ["train-000", "train-001"]


def test_zero_fraction_has_no_labels():
    benchmark = make_benchmark(n_series=4, length=300, anomaly_fraction=0.0)
    assert benchmark.labeled_fraction() == 0.0


def test_labeled_fraction():
    benchmark = make_benchmark(n_series=10, length=2000, rng=1)
    assert abs(benchmark.labeled_fraction() - 0.02) <= 0.005


def test_anomalies_keep_clear_of_the_start():
    benchmark = make_benchmark(n_series=4, length=800, rng=2, anomaly_fraction=0.05)
    for series in benchmark.all():
        assert not series.labels[:120].any()


def test_seasonal_preset_spans():
    benchmark = seasonal_benchmark(n_series=3, length=600, rng=5)
    for series in benchmark.all():
        spans = segments(series.labels)
        assert spans
        assert all(end - start >= 4 for start, end in spans)


def test_unseen_kinds_preset_trains_on_points():
    benchmark = unseen_kinds_benchmark(n_series=5, length=600, rng=6)
    for series in benchmark.train + benchmark.val:
        assert all(end - start == 1 for start, end in segments(series.labels))
    assert benchmark.test


@pytest.mark.parametrize("seed", range(5))
def test_every_injection_owns_one_labeled_region(seed):
    series = sine(600, 37.0)
    out = inject_anomalies(series, AnomalyKind.members(), 0.08, np.random.default_rng(seed), margin=30)
    regions = segments(out.labels)
    assert regions
    changed = np.flatnonzero(out.values[0] != series.values[0])
    # nothing moves outside the labels, and every label region was altered
    assert out.labels[changed].all()
    for start, end in regions:
        assert ((changed >= start) & (changed < end)).any()
    for (_, end), (start, _) in zip(regions, regions[1:]):
        assert start - end >= GAP
