# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np

from .tensor import Tensor


class Adam:
    """Adaptive moment estimation

    :param params: Tensors updated in place by :py:meth:`step`
    :param float lr: Learning rate
    :param float beta1: Decay of the first moment
    :param float beta2: Decay of the second moment
    :param float epsilon: Added to the root of the second moment
    """

    def __init__(self, params: list[Tensor], lr: float = 1e-3, beta1: float = 0.9, beta2: float = 0.999, epsilon: float = 1e-8):
        self._params = list(params)
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.epsilon = epsilon
        self._m = [np.zeros_like(p.data) for p in self._params]
        self._v = [np.zeros_like(p.data) for p in self._params]
        self._t = 0

    @property
    def steps(self) -> int:
        return self._t

    def zero_grad(self):
        for p in self._params:
            p.zero_grad()

    def step(self):
        """Update every parameter that received a gradient"""
        self._t += 1
        bias1 = 1.0 - self.beta1**self._t
        bias2 = 1.0 - self.beta2**self._t
        for p, m, v in zip(self._params, self._m, self._v):
            if p.grad is None:
                continue
            m *= self.beta1
            m += (1.0 - self.beta1) * p.grad
            v *= self.beta2
            v += (1.0 - self.beta2) * p.grad**2
            p.data -= self.lr * (m / bias1) / (np.sqrt(v / bias2) + self.epsilon)
