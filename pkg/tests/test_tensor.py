# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np
import pytest

from tfad.errors import ChannelMismatch, InvalidParameter, NoForwardRecorded
from tfad.nn.ops import bce_with_logits, causal_conv1d, cosine_distance, stack
from tfad.nn.tensor import Tensor, no_grad, sigmoid


def param(*shape, seed=0, low=-1.0, high=1.0):
    return Tensor(np.random.default_rng(seed).uniform(low, high, size=shape), requires_grad=True)


def away_from_zero(*shape, seed=0):
    gen = np.random.default_rng(seed)
    values = gen.uniform(0.2, 1.0, size=shape) * gen.choice((-1.0, 1.0), size=shape)
    return Tensor(values, requires_grad=True)


def test_square_gradient():
    w = Tensor([1.0, 2.0], requires_grad=True)
    (w * w).sum().backward()
    np.testing.assert_array_equal(w.grad, [2.0, 4.0])


def test_arithmetic_gradients(gradcheck):
    a, b = param(3, 4, seed=1), param(4, seed=2)
    gradcheck(lambda: ((a + b) * a - b * 2.0 - 1.0).sum(), [a, b])


def test_matmul_gradient(gradcheck):
    a, b = param(3, 4, seed=3), param(4, 2, seed=4)
    gradcheck(lambda: ((a @ b) * (a @ b)).mean(), [a, b])


def test_elementwise_gradients(gradcheck):
    x = away_from_zero(2, 5, seed=5)
    gradcheck(lambda: (x.relu() + x.sigmoid() * x).sum(), [x])


def test_reductions_and_reshape(gradcheck):
    x = param(2, 3, 4, seed=6)
    gradcheck(lambda: (x.sum(axis=2) * x.mean(axis=2)).reshape(6).sum(), [x])


def test_shared_node_accumulates():
    x = Tensor(3.0, requires_grad=True)
    y = x * 2.0
    (y * y + y).backward()
    # d/dx (4 x^2 + 2 x) = 8 x + 2
    assert x.grad == pytest.approx(26.0)


def test_gradients_accumulate_until_cleared():
    x = Tensor([1.0], requires_grad=True)
    (x * 3.0).sum().backward()
    (x * 3.0).sum().backward()
    np.testing.assert_array_equal(x.grad, [6.0])
    x.zero_grad()
    assert x.grad is None


def test_causal_conv_gradient(gradcheck):
    x = param(2, 3, 7, seed=7)
    w = param(2, 3, 3, seed=8)
    b = param(2, seed=9)
    gradcheck(lambda: (causal_conv1d(x, w, b, dilation=2) * causal_conv1d(x, w, b, dilation=2)).sum(), [x, w, b])


def test_causal_conv_values():
    x = Tensor([[[1.0, 2.0, 3.0]]])
    w = Tensor([[[10.0, 1.0]]])
    out = causal_conv1d(x, w, Tensor([0.5]))
    np.testing.assert_allclose(out.data, [[[1.5, 12.5, 23.5]]])
    dilated = causal_conv1d(x, w, dilation=2)
    np.testing.assert_allclose(dilated.data, [[[1.0, 2.0, 13.0]]])


def test_causal_conv_ignores_future():
    gen = np.random.default_rng(10)
    x = gen.normal(size=(1, 2, 12))
    w = Tensor(gen.normal(size=(3, 2, 3)))
    base = causal_conv1d(Tensor(x), w, dilation=2).data
    changed = x.copy()
    changed[:, :, 8:] += 5.0
    np.testing.assert_array_equal(causal_conv1d(Tensor(changed), w, dilation=2).data[:, :, :8], base[:, :, :8])


def test_causal_conv_channel_mismatch():
    with pytest.raises(ChannelMismatch):
        causal_conv1d(Tensor(np.zeros((1, 2, 5))), Tensor(np.zeros((1, 3, 2))))


def test_cosine_distance_values():
    u = Tensor([[1.0, 0.0], [1.0, 1.0], [0.0, 0.0]])
    v = Tensor([[0.0, 1.0], [2.0, 2.0], [1.0, 0.0]])
    np.testing.assert_allclose(cosine_distance(u, v).data, [1.0, 0.0, 1.0], atol=1e-12)


def test_cosine_distance_gradient(gradcheck):
    u, v = param(4, 3, seed=11), param(4, 3, seed=12)
    weights = np.arange(1.0, 5.0)
    gradcheck(lambda: (cosine_distance(u, v) * weights).sum(), [u, v])


def test_cosine_distance_zero_vector_has_zero_gradient():
    u = Tensor(np.zeros((1, 3)), requires_grad=True)
    v = Tensor([[1.0, 2.0, 3.0]], requires_grad=True)
    cosine_distance(u, v).sum().backward()
    np.testing.assert_array_equal(u.grad, 0.0)
    np.testing.assert_array_equal(v.grad, 0.0)


def test_stack_gradient(gradcheck):
    a, b = param(2, 3, seed=13), param(2, 3, seed=14)
    scale = np.arange(12.0).reshape(2, 2, 3)
    gradcheck(lambda: (stack([a, b], axis=1) * stack([a, b], axis=1) * scale).sum(), [a, b])


def test_bce_matches_definition():
    z = np.array([-3.0, 0.0, 2.0, 10.0])
    y = np.array([0.0, 1.0, 1.0, 0.0])
    p = sigmoid(z)
    expected = -np.mean(y * np.log(p) + (1 - y) * np.log1p(-p))
    assert bce_with_logits(Tensor(z), y).item() == pytest.approx(expected, rel=1e-9)
    assert bce_with_logits(Tensor([0.0]), [1.0]).item() == pytest.approx(np.log(2.0))


def test_bce_gradient(gradcheck):
    z = param(6, seed=15, low=-3.0, high=3.0)
    y = np.array([0, 1, 1, 0, 1, 0])
    gradcheck(lambda: bce_with_logits(z, y), [z])


def test_sigmoid_is_stable():
    out = sigmoid(np.array([-1000.0, 0.0, 1000.0]))
    np.testing.assert_array_equal(out, [0.0, 0.5, 1.0])


def test_no_grad_records_nothing():
    x = Tensor([1.0, 2.0], requires_grad=True)
    with no_grad():
        y = (x * x).sum()
    assert not y.requires_grad
    with pytest.raises(NoForwardRecorded):
        y.backward()
    assert (x * x).sum().requires_grad


def test_backward_needs_a_forward_pass():
    with pytest.raises(NoForwardRecorded):
        Tensor([1.0], requires_grad=True).backward()


def test_implicit_gradient_needs_scalar():
    x = Tensor([1.0, 2.0], requires_grad=True)
    with pytest.raises(InvalidParameter):
        (x * 2.0).backward()


def test_gradients_are_deterministic():
    def grads():
        x = param(2, 3, 6, seed=16)
        w = param(4, 3, 2, seed=17)
        causal_conv1d(x, w).relu().sum().backward()
        return x.grad, w.grad

    (x1, w1), (x2, w2) = grads(), grads()
    np.testing.assert_array_equal(x1, x2)
    np.testing.assert_array_equal(w1, w2)
