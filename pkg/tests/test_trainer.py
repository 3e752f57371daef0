# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import math

import numpy as np
import pytest

from tfad.errors import EmptyTrainingSet, InvalidParameter
from tfad.models.windowpair import WindowPair
from tfad.nn.optim import Adam
from tfad.nn.tcnconfig import TcnConfig
from tfad.nn.tensor import Tensor
from tfad.nn.tfadmodel import TfadModel
from tfad.nn.trainer import TrainConfig, train

TINY = TcnConfig(hidden_channels=4, num_blocks=2, kernel_size=2, embedding_dim=4)


def spike_pairs(count: int = 40, seed: int = 0) -> list[WindowPair]:
    """Sine windows, every second one with a large spike in its suspect part"""
    gen = np.random.default_rng(seed)
    t = np.arange(24)
    pairs = []
    for i in range(count):
        window = np.sin(2.0 * np.pi * (t + gen.integers(12)) / 12) + gen.normal(0.0, 0.05, t.size)
        label = i % 2
        if label:
            window[16 + gen.integers(8)] += 6.0 * gen.choice((-1.0, 1.0))
        pairs.append(WindowPair(window, 16, label, i, "toy"))
    return pairs


def test_zero_learning_rate_keeps_parameters():
    model = TfadModel(1, tcn=TINY, rng=0)
    result = train(model, spike_pairs(8), TrainConfig(epochs=3, batch_size=4, learning_rate=0.0))
    for name, tensor in model.parameters().items():
        np.testing.assert_array_equal(result.model.parameters()[name].data, tensor.data)
    assert result.model is not model


def test_zero_head_starts_at_log_two():
    model = TfadModel(1, tcn=TINY, rng=0, zero_head=True)
    result = train(model, spike_pairs(10), TrainConfig(epochs=1))
    assert result.initial_loss == pytest.approx(math.log(2.0), abs=1e-12)
    assert len(result.losses) == 1


def test_training_does_not_touch_the_initial_model():
    model = TfadModel(1, tcn=TINY, rng=1)
    before = {k: v.data.copy() for k, v in model.parameters().items()}
    train(model, spike_pairs(8), TrainConfig(epochs=2, batch_size=4, learning_rate=1e-2))
    for name, tensor in model.parameters().items():
        np.testing.assert_array_equal(tensor.data, before[name])


def test_separable_toy_problem_is_learned():
    model = TfadModel(1, branches=["time_residual", "time_trend"], tcn=TINY, lam=10.0, rng=2)
    pairs = spike_pairs(40)
    result = train(model, pairs, TrainConfig(epochs=60, batch_size=8, learning_rate=1e-2, seed=3))
    assert result.final_loss < 0.5 * result.initial_loss
    scores = result.model.predict(pairs)
    labels = np.array([p.label for p in pairs])
    assert scores[labels == 1].mean() > scores[labels == 0].mean()


def test_training_is_deterministic():
    pairs = spike_pairs(12)
    config = TrainConfig(epochs=3, batch_size=5, learning_rate=1e-2, seed=4)
    a = train(TfadModel(1, tcn=TINY, rng=5), pairs, config)
    b = train(TfadModel(1, tcn=TINY, rng=5), pairs, config)
    assert a.losses == b.losses
    for name, tensor in a.model.parameters().items():
        np.testing.assert_array_equal(tensor.data, b.model.parameters()[name].data)


def test_empty_training_set():
    with pytest.raises(EmptyTrainingSet):
        train(TfadModel(1, tcn=TINY), [], TrainConfig())


@pytest.mark.parametrize(
    "kwargs",
    [{"epochs": 0}, {"batch_size": 0}, {"learning_rate": -1.0}, {"beta1": 1.0}, {"epsilon": 0.0}, {"seed": -1}],
)
def test_invalid_train_config(kwargs):
    with pytest.raises(InvalidParameter):
        TrainConfig(**kwargs)


def test_adam_first_step_moves_by_learning_rate():
    w = Tensor([1.0, -2.0], requires_grad=True)
    optimizer = Adam([w], lr=0.1)
    (w * w).sum().backward()
    optimizer.step()
    np.testing.assert_allclose(w.data, [0.9, -1.9], rtol=1e-6)
    assert optimizer.steps == 1


def test_adam_skips_parameters_without_gradient():
    w = Tensor([1.0], requires_grad=True)
    optimizer = Adam([w], lr=0.1)
    optimizer.step()
    np.testing.assert_array_equal(w.data, [1.0])
