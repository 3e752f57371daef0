# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.detect.scoring import ScoreSeries, coverage_counts, detect_series, score_series, vote_point_labels
from tfad.detect.windows import split_windows, window_starts
from tfad.errors import InvalidParameter, SeriesShorterThanWindow
from tfad.models.timeseries import TimeSeries
from tfad.models.windowspec import WindowSpec
from tfad.nn.tcnconfig import TcnConfig
from tfad.nn.tfadmodel import TfadModel

TINY = TcnConfig(hidden_channels=2, num_blocks=1, kernel_size=2, embedding_dim=2)


def test_window_count():
    pairs = split_windows(TimeSeries("s", np.arange(10.0)), WindowSpec(4, 2, 1))
    assert len(pairs) == 5
    assert [p.start for p in pairs] == [0, 1, 2, 3, 4]
    np.testing.assert_array_equal(pairs[2].context, [[2.0, 3.0, 4.0, 5.0]])
    np.testing.assert_array_equal(pairs[2].suspect, [[6.0, 7.0]])


def test_window_stride():
    np.testing.assert_array_equal(window_starts(11, WindowSpec(4, 2, 2)), [0, 2, 4])
    np.testing.assert_array_equal(window_starts(6, WindowSpec(4, 2, 5)), [0])


def test_window_label_follows_suspect_span():
    labels = np.zeros(10, dtype=np.int8)
    labels[6] = 1
    pairs = split_windows(TimeSeries("s", np.arange(10.0), labels), WindowSpec(4, 2, 1))
    # only windows whose suspect part covers point 6, context anomalies do not count
    assert [p.label for p in pairs] == [0, 1, 1, 0, 0]


def test_series_shorter_than_window():
    with pytest.raises(SeriesShorterThanWindow):
        split_windows(TimeSeries("s", np.arange(5.0)), WindowSpec(4, 2, 1))


def test_majority_vote_three_windows():
    spec = WindowSpec(2, 3, 1)
    scores = [(0, 0.9), (1, 0.9), (2, 0.1), (3, 0.1), (4, 0.1), (5, 0.1)]
    # point 4 is covered by three suspect parts, two of them flagged
    labels = vote_point_labels(scores, 0.5, spec, 10)
    np.testing.assert_array_equal(labels, [0, 0, 1, 1, 1, 0, 0, 0, 0, 0])


def test_half_of_the_votes_is_not_a_majority():
    spec = WindowSpec(2, 2, 1)
    scores = [(0, 0.9), (1, 0.1), (2, 0.1), (3, 0.1)]
    # point 3 is covered by windows 0 and 1, only one of them flagged
    labels = vote_point_labels(scores, 0.5, spec, 7)
    np.testing.assert_array_equal(labels, [0, 0, 1, 0, 0, 0, 0])


def test_score_equal_to_threshold_is_not_flagged():
    labels = vote_point_labels([(0, 0.5)], 0.5, WindowSpec(2, 2, 1), 4)
    np.testing.assert_array_equal(labels, 0)


def test_uncovered_points_are_normal():
    labels = vote_point_labels([(0, 0.9), (3, 0.9)], 0.5, WindowSpec(2, 1, 3), 7)
    np.testing.assert_array_equal(labels, [0, 0, 1, 0, 0, 1, 0])


def test_vote_rejects_threshold_outside_unit_interval():
    with pytest.raises(InvalidParameter):
        vote_point_labels([(0, 0.9)], 1.0, WindowSpec(2, 2, 1), 4)
    assert not vote_point_labels([], 0.5, WindowSpec(2, 2, 1), 4).any()


def test_neutral_model_flags_nothing(sine_series):
    model = TfadModel(1, tcn=TINY, rng=0, zero_head=True)
    result = detect_series(model, sine_series(40, 8.0), WindowSpec(8, 4, 1), 0.5)
    assert len(result.window_scores) == 29
    np.testing.assert_allclose([p for _, p in result.window_scores], 0.5)
    assert result.anomaly_count == 0
    assert result.point_labels.shape == (40,)
    assert result.series_id == "sine"


def test_chunked_scores_match_window_pairs(sine_series):
    model = TfadModel(1, tcn=TINY, rng=1)
    series = sine_series(60, 12.0, noise=0.1)
    spec = WindowSpec(16, 4, 3)
    scores = score_series(model, series, spec)
    expected = model.predict(split_windows(series, spec))
    assert [s for s, _ in scores] == list(range(0, 41, 3))
    np.testing.assert_allclose([p for _, p in scores], expected, rtol=1e-12)


def test_score_series_validation():
    with pytest.raises(InvalidParameter):
        ScoreSeries("s", [(0, 1.0)], [0, 0], 0.5)
    with pytest.raises(InvalidParameter):
        ScoreSeries("s", [(0, 0.4)], [0, 0], 0.0)
    result = ScoreSeries("s", [(0, 0.7)], [0, 1], 0.5)
    assert result.anomaly_count == 1
    assert "anomalies=1" in repr(result)


@pytest.mark.parametrize("context_len, suspect_len, length", [(4, 2, 10), (16, 4, 97), (3, 7, 30)])
def test_coverage_bookkeeping(context_len, suspect_len, length):
    spec = WindowSpec(context_len, suspect_len, 1)
    starts = window_starts(length, spec)
    covered, _ = coverage_counts(starts, np.zeros(starts.size, dtype=bool), spec, length)
    assert covered.sum() == starts.size * suspect_len
    assert not covered[:context_len].any()
    assert (covered[context_len:] >= 1).all()


def test_every_covered_point_follows_unanimous_windows():
    spec = WindowSpec(5, 3, 1)
    scores = [(int(s), 0.9) for s in window_starts(20, spec)]
    labels = vote_point_labels(scores, 0.5, spec, 20)
    np.testing.assert_array_equal(labels, [0] * 5 + [1] * 15)


def test_lower_threshold_never_removes_anomalies():
    gen = np.random.default_rng(0)
    spec = WindowSpec(6, 4, 1)
    for _ in range(200):
        starts = window_starts(40, spec)
        scores = list(zip(starts.tolist(), gen.random(starts.size).tolist()))
        high, low = np.sort(gen.uniform(0.01, 0.99, size=2))[::-1]
        assert (vote_point_labels(scores, low, spec, 40) >= vote_point_labels(scores, high, spec, 40)).all()


def test_constant_series_scores_are_equal():
    model = TfadModel(1, tcn=TINY, rng=3)
    scores = score_series(model, TimeSeries("flat", np.full(50, 4.2)), WindowSpec(10, 4, 1))
    probs = [p for _, p in scores]
    np.testing.assert_allclose(probs, probs[0], rtol=1e-12)
