# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.errors import ChannelMismatch, InvalidParameter
from tfad.nn.tcnconfig import TcnConfig
from tfad.nn.tcnencoder import TcnEncoder
from tfad.nn.tensor import Tensor


def test_zero_parameters_give_zero_embedding():
    encoder = TcnEncoder(TcnConfig(in_channels=2, hidden_channels=4, num_blocks=2, kernel_size=3, embedding_dim=5))
    out = encoder(np.random.default_rng(0).normal(size=(3, 2, 10)))
    assert out.shape == (3, 5)
    np.testing.assert_array_equal(out.data, 0.0)


def test_single_block_by_hand():
    encoder = TcnEncoder(TcnConfig(in_channels=1, hidden_channels=1, num_blocks=1, kernel_size=2, embedding_dim=1))
    encoder.params["block0.conv1.weight"].data[...] = [[[1.0, 1.0]]]
    encoder.params["block0.conv2.weight"].data[...] = [[[0.0, 2.0]]]
    encoder.params["block0.conv2.bias"].data[...] = [-1.0]
    encoder.params["out.weight"].data[...] = [[0.5]]
    encoder.params["out.bias"].data[...] = [1.0]
    # conv1: [1, 3, 5], conv2: [1, 5, 9], residual: [2, 7, 12], mean 7
    out = encoder(np.array([[[1.0, 2.0, 3.0]]]))
    np.testing.assert_allclose(out.data, [[4.5]])


def test_projection_only_when_channels_change():
    same = TcnEncoder(TcnConfig(in_channels=4, hidden_channels=4, num_blocks=2))
    other = TcnEncoder(TcnConfig(in_channels=1, hidden_channels=4, num_blocks=2))
    assert not any(".proj." in name for name in same.params)
    assert set(n for n in other.params if ".proj." in n) == {"block0.proj.weight", "block0.proj.bias"}


def test_parameter_count():
    encoder = TcnEncoder(TcnConfig(in_channels=1, hidden_channels=2, num_blocks=1, kernel_size=2, embedding_dim=2))
    # conv1 2*1*2 + 2, conv2 2*2*2 + 2, proj 2*1 + 2, out 2*2 + 2
    assert encoder.parameter_count() == 6 + 10 + 4 + 6


def test_initialization_is_seeded():
    config = TcnConfig(hidden_channels=3, num_blocks=2)
    a, b = TcnEncoder(config, rng=5), TcnEncoder(config, rng=5)
    for name, tensor in a.params.items():
        np.testing.assert_array_equal(tensor.data, b.params[name].data)
        if name.endswith("bias"):
            np.testing.assert_array_equal(tensor.data, 0.0)


def test_features_are_causal():
    config = TcnConfig(in_channels=2, hidden_channels=3, num_blocks=2, kernel_size=3, embedding_dim=4)
    encoder = TcnEncoder(config, rng=1)
    gen = np.random.default_rng(2)
    x = gen.normal(size=(1, 2, 20))
    prefix = gen.normal(size=(1, 2, 9))

    # two convolutions per block
    reach = 1 + 2 * (config.kernel_size - 1) * (2**config.num_blocks - 1)
    assert reach <= x.shape[2]
    plain = encoder.features(x).data
    extended = encoder.features(np.concatenate((prefix, x), axis=2)).data[:, :, prefix.shape[2] :]
    np.testing.assert_allclose(extended[:, :, reach - 1 :], plain[:, :, reach - 1 :], atol=1e-12)
    np.testing.assert_allclose(extended[..., -1], plain[..., -1], atol=1e-12)


def test_encoder_gradient(gradcheck):
    config = TcnConfig(in_channels=1, hidden_channels=2, num_blocks=2, kernel_size=2, embedding_dim=3)
    encoder = TcnEncoder(config, rng=3)
    gen = np.random.default_rng(4)
    for tensor in encoder.params.values():
        tensor.data[...] = gen.uniform(-1.0, 1.0, size=tensor.shape)
    x = Tensor(gen.normal(size=(2, 1, 6)))
    target = gen.normal(size=(2, 3))
    gradcheck(lambda: ((encoder(x) - target) * (encoder(x) - target)).sum(), list(encoder.params.values()))


def test_channel_mismatch():
    encoder = TcnEncoder(TcnConfig(in_channels=2))
    with pytest.raises(ChannelMismatch):
        encoder(np.zeros((1, 3, 8)))


@pytest.mark.parametrize("field", ["hidden_channels", "num_blocks", "embedding_dim"])
def test_config_rejects_zero(field):
    with pytest.raises(InvalidParameter):
        TcnConfig(**{field: 0})


def test_config_kernel_size():
    with pytest.raises(InvalidParameter):
        TcnConfig(kernel_size=1)
    assert TcnConfig(num_blocks=3, kernel_size=3).dilation(2) == 4
