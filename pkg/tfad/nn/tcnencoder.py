# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.nn.tcnencoder`

Temporal convolutional encoder: residual blocks of two dilated causal convolutions, temporal
mean pooling and a linear map to the embedding.
"""

import numpy as np

from ..models.rngseed import as_rng
from .ops import causal_conv1d
from .tcnconfig import TcnConfig
from .tensor import Tensor, as_tensor


class TcnEncoder:
    """Encoder and its parameters

    :param config: Encoder shape
    :param rng: Seed or generator used for He initialization, ``None`` for all zero parameters

    Parameters are named ``block{i}.conv1.weight``, ``block{i}.conv1.bias``, ``block{i}.conv2.*``,
    ``block{i}.proj.*`` (only when the block changes the number of channels), ``out.weight``
    ``(hidden, embedding)`` and ``out.bias``.
    """

    def __init__(self, config: TcnConfig, rng=None):
        self._config = config
        gen = None if rng is None else as_rng(rng)
        self._params: dict[str, Tensor] = {}

        channels = config.in_channels
        hidden = config.hidden_channels
        kernel = config.kernel_size
        for block in range(config.num_blocks):
            self._add(f"block{block}.conv1.weight", (hidden, channels, kernel), channels * kernel, gen)
            self._add(f"block{block}.conv1.bias", (hidden,), None, gen)
            self._add(f"block{block}.conv2.weight", (hidden, hidden, kernel), hidden * kernel, gen)
            self._add(f"block{block}.conv2.bias", (hidden,), None, gen)
            if channels != hidden:
                self._add(f"block{block}.proj.weight", (hidden, channels, 1), channels, gen)
                self._add(f"block{block}.proj.bias", (hidden,), None, gen)
            channels = hidden
        self._add("out.weight", (hidden, config.embedding_dim), hidden, gen)
        self._add("out.bias", (config.embedding_dim,), None, gen)

    def _add(self, name: str, shape: tuple[int, ...], fan_in: int | None, gen):
        if gen is None or fan_in is None:
            data = np.zeros(shape)
        else:
            data = gen.normal(0.0, np.sqrt(2.0 / fan_in), size=shape)
        self._params[name] = Tensor(data, requires_grad=True)

    @property
    def config(self) -> TcnConfig:
        return self._config

    @property
    def params(self) -> dict[str, Tensor]:
        """Parameters by name, in creation order"""
        return self._params

    def parameter_count(self) -> int:
        return sum(p.data.size for p in self._params.values())

    def features(self, x) -> Tensor:
        """Output of the last residual block, before pooling, ``(B, hidden, L)``

        :param x: Input ``(B, in_channels, L)``
        """
        p = self._params
        h = as_tensor(x)
        for block in range(self._config.num_blocks):
            dilation = self._config.dilation(block)
            name = f"block{block}"
            y = causal_conv1d(h, p[f"{name}.conv1.weight"], p[f"{name}.conv1.bias"], dilation).relu()
            y = causal_conv1d(y, p[f"{name}.conv2.weight"], p[f"{name}.conv2.bias"], dilation).relu()
            if f"{name}.proj.weight" in p:
                h = causal_conv1d(h, p[f"{name}.proj.weight"], p[f"{name}.proj.bias"])
            h = y + h
        return h

    def forward(self, x) -> Tensor:
        """Embeddings ``(B, embedding_dim)`` of a batch ``(B, in_channels, L)``"""
        pooled = self.features(x).mean(axis=2)
        return pooled @ self._params["out.weight"] + self._params["out.bias"]

    __call__ = forward
