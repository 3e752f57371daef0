# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.cli.pipelineconfig import PipelineConfig
from tfad.models.timeseries import TimeSeries

STEP = 1e-5


def numeric_gradient(loss, array: np.ndarray, step: float = STEP) -> np.ndarray:
    """Central finite differences of ``loss()`` with respect to every entry of ``array`` (changed in place)"""
    grad = np.zeros_like(array)
    flat = array.reshape(-1)
    out = grad.reshape(-1)
    for i in range(flat.size):
        original = flat[i]
        flat[i] = original + step
        plus = loss()
        flat[i] = original - step
        minus = loss()
        flat[i] = original
        out[i] = (plus - minus) / (2.0 * step)
    return grad


def relative_error(analytic: np.ndarray, numeric: np.ndarray) -> float:
    """Largest per coordinate ``|a - n| / max(|a|, |n|, 1e-6)``"""
    scale = np.maximum(np.maximum(np.abs(analytic), np.abs(numeric)), 1e-6)
    return float(np.max(np.abs(analytic - numeric) / scale))


@pytest.fixture
def gradcheck():
    def check(loss, tensors, tolerance: float = 1e-4):
        """Compare the recorded gradients of ``tensors`` with finite differences of ``loss``"""
        for tensor in tensors:
            tensor.zero_grad()
        loss().backward()
        for tensor in tensors:
            analytic = tensor.grad.copy()
            numeric = numeric_gradient(lambda: loss().item(), tensor.data)
            assert relative_error(analytic, numeric) < tolerance

    return check


@pytest.fixture
def sine_series():
    def make(length: int = 256, period: float = 32.0, noise: float = 0.0, seed: int = 0, id: str = "sine") -> TimeSeries:
        t = np.arange(length)
        values = np.sin(2.0 * np.pi * t / period)
        if noise:
            values = values + np.random.default_rng(seed).normal(0.0, noise, length)
        return TimeSeries(id, values)

    return make


SMALL = {
    "seed": 3,
    "decomposition": {"enabled": True, "lam": 100.0},
    "window": {"context_len": 16, "suspect_len": 4, "stride": 1, "train_stride": 4},
    "model": {"tcn": {"hidden_channels": 4, "num_blocks": 2, "kernel_size": 2, "embedding_dim": 4}},
    "train": {"epochs": 2, "batch_size": 32, "learning_rate": 0.01},
}


@pytest.fixture
def small_config():
    """A pipeline configuration that trains in well under a second"""
    return PipelineConfig.from_dict(SMALL)
