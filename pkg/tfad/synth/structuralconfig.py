# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import math
from dataclasses import dataclass

import numpy as np

from ..errors import InvalidOmega, InvalidParameter
from ..models.utils import validate_finite, validate_positive_int


@dataclass(frozen=True)
class StructuralConfig:
    """Structural model of a synthetic series::

        x_t = sum_n (A_n sin(2 pi w_n t) + B_n cos(2 pi w_n t)) + tau(t) + noise

    :param components: ``(A, B, omega)`` triples, ``omega`` in cycles per sample, ``0 < omega <= 0.5``
    :param trend: Piecewise constant slope schedule ``((t_0, s_0), (t_1, s_1), ...)``: from ``t_i`` on
        the trend grows by ``s_i`` per sample. ``tau(0) = 0``
    :param noise_std: Standard deviation of the Gaussian noise
    :param length: Number of samples T
    :param dims: Number of dimensions D. Dimension 0 follows the formula as is, the others are
        shifted by a random phase
    """

    components: tuple[tuple[float, float, float], ...] = ((1.0, 0.0, 1.0 / 32.0),)
    trend: tuple[tuple[int, float], ...] = ()
    noise_std: float = 0.0
    length: int = 2000
    dims: int = 1

    def __post_init__(self):
        components = []
        for component in self.components:
            a, b, omega = (float(v) for v in component)
            if not (math.isfinite(omega) and 0.0 < omega <= 0.5):
                raise InvalidOmega(f"Frequency {omega} must be in range (0, 0.5] cycles per sample")
            components.append((validate_finite(a, "A"), validate_finite(b, "B"), omega))
        object.__setattr__(self, "components", tuple(components))

        trend = tuple(sorted((int(t), validate_finite(s, "slope")) for t, s in self.trend))
        if trend and trend[0][0] < 0:
            raise InvalidParameter("Trend schedule times must be nonnegative")
        object.__setattr__(self, "trend", trend)

        noise = validate_finite(self.noise_std, "noise_std")
        if noise < 0:
            raise InvalidParameter(f"noise_std must be nonnegative, got {noise}")
        validate_positive_int(self.length, "length")
        validate_positive_int(self.dims, "dims")

    def slopes(self) -> np.ndarray:
        """Slope in effect at every sample"""
        slopes = np.zeros(self.length)
        for start, slope in self.trend:
            slopes[min(start, self.length) :] = slope
        return slopes

    def trend_values(self) -> np.ndarray:
        """``tau(t) = sum of the slopes before t``"""
        return np.concatenate(([0.0], np.cumsum(self.slopes()[:-1])))
