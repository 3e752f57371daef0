# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np


class DecomposedSeries:
    """Trend and residual of a series, ``trend + residual`` gives back the input"""

    def __init__(self, trend: np.ndarray, residual: np.ndarray, lam: float):
        trend.setflags(write=False)
        residual.setflags(write=False)
        self._trend = trend
        self._residual = residual
        self._lam = float(lam)

    @property
    def trend(self) -> np.ndarray:
        """Trend component ``D x T``"""
        return self._trend

    @property
    def residual(self) -> np.ndarray:
        """Residual component ``D x T``"""
        return self._residual

    @property
    def lam(self) -> float:
        """Smoothing multiplier used for the decomposition"""
        return self._lam

    def reconstruct(self) -> np.ndarray:
        return self._trend + self._residual
