# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.nn.ops`

Layer operations with hand written gradients: causal dilated convolution, cosine distance,
stacking and binary cross-entropy on logits.
"""

import numpy as np

from ..errors import ChannelMismatch, InvalidParameter
from .tensor import Tensor, as_tensor, sigmoid

COSINE_EPSILON = 1e-12


def causal_conv1d(x: Tensor, weight: Tensor, bias: Tensor | None = None, dilation: int = 1) -> Tensor:
    """Dilated causal convolution

    :param x: Input ``(B, C_in, L)``
    :param weight: Kernels ``(C_out, C_in, K)``, tap ``K - 1`` multiplies the current sample
    :param bias: Optional ``(C_out,)``
    :param dilation: Distance between two taps
    :return: Output ``(B, C_out, L)``. Position ``t`` only depends on input positions ``<= t``,
        the input is left padded with ``(K - 1) * dilation`` zeros
    :raises ChannelMismatch: When ``C_in`` differs from the kernel input channels
    """
    x, weight = as_tensor(x), as_tensor(weight)
    if x.ndim != 3:
        raise InvalidParameter(f"Convolution input must be (B, C, L), got shape {x.shape}")
    batch, channels, length = x.shape
    out_channels, in_channels, kernel = weight.shape
    if channels != in_channels:
        raise ChannelMismatch(f"Input has {channels} channels, kernel expects {in_channels}")

    pad = (kernel - 1) * dilation
    padded = np.concatenate((np.zeros((batch, channels, pad)), x.data), axis=2)
    w = weight.data
    taps = [padded[:, :, k * dilation : k * dilation + length] for k in range(kernel)]

    out = np.zeros((batch, out_channels, length))
    for k, tap in enumerate(taps):
        out += np.matmul(w[:, :, k], tap)

    parents = [x, weight]
    if bias is not None:
        bias = as_tensor(bias)
        out += bias.data[None, :, None]
        parents.append(bias)

    def backward(g):
        grad_padded = np.zeros_like(padded)
        grad_w = np.empty_like(w)
        for k, tap in enumerate(taps):
            grad_w[:, :, k] = np.tensordot(g, tap, axes=([0, 2], [0, 2]))
            grad_padded[:, :, k * dilation : k * dilation + length] += np.matmul(w[:, :, k].T, g)
        grads = [grad_padded[:, :, pad:], grad_w]
        if bias is not None:
            grads.append(g.sum(axis=(0, 2)))
        return tuple(grads)

    return Tensor.from_op(out, parents, backward, "conv1d")


def cosine_distance(u: Tensor, v: Tensor) -> Tensor:
    """Row wise ``1 - cos(u, v)`` for two ``(B, E)`` batches

    ``cos = <u, v> / max(|u| |v|, 1e-12)``, and ``cos = 0`` when either norm is below ``1e-12``.
    """
    u, v = as_tensor(u), as_tensor(v)
    a, b = u.data, v.data
    norm_a = np.linalg.norm(a, axis=1)
    norm_b = np.linalg.norm(b, axis=1)
    dot = np.sum(a * b, axis=1)
    product = norm_a * norm_b
    denom = np.maximum(product, COSINE_EPSILON)
    alive = (norm_a >= COSINE_EPSILON) & (norm_b >= COSINE_EPSILON)
    cos = np.where(alive, dot / denom, 0.0)

    def backward(g):
        # d cos / d a = b / D - dot / D^2 * dD / da, with dD / da = |b| / |a| * a when D = |a| |b|
        unclipped = alive & (product > COSINE_EPSILON)
        safe_a = np.where(norm_a > 0, norm_a, 1.0)
        safe_b = np.where(norm_b > 0, norm_b, 1.0)
        d_denom_a = np.where(unclipped, norm_b / safe_a, 0.0)[:, None] * a
        d_denom_b = np.where(unclipped, norm_a / safe_b, 0.0)[:, None] * b
        scale = (dot / denom**2)[:, None]
        grad_a = b / denom[:, None] - scale * d_denom_a
        grad_b = a / denom[:, None] - scale * d_denom_b
        factor = np.where(alive, -g, 0.0)[:, None]
        return factor * grad_a, factor * grad_b

    return Tensor.from_op(1.0 - cos, (u, v), backward, "cosine_distance")


def stack(tensors: list[Tensor], axis: int = 1) -> Tensor:
    """Stack equally shaped tensors along a new axis"""
    tensors = [as_tensor(t) for t in tensors]
    out = np.stack([t.data for t in tensors], axis=axis)
    count = len(tensors)
    return Tensor.from_op(
        out,
        tensors,
        lambda g: tuple(np.take(g, i, axis=axis) for i in range(count)),
        "stack",
    )


def bce_with_logits(logits: Tensor, targets) -> Tensor:
    """Mean binary cross-entropy between ``sigmoid(logits)`` and 0/1 ``targets``"""
    logits = as_tensor(logits)
    z = logits.data
    y = np.asarray(targets, dtype=np.float64).reshape(z.shape)
    losses = np.maximum(z, 0.0) - z * y + np.log1p(np.exp(-np.abs(z)))
    count = z.size
    return Tensor.from_op(np.mean(losses), (logits,), lambda g: (g * (sigmoid(z) - y) / count,), "bce")
