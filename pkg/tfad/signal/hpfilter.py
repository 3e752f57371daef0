# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.signal.hpfilter`

Hodrick-Prescott trend/residual decomposition. For every dimension the trend ``tau`` minimizes::

    sum (y_t - tau_t)^2 + lam * sum ((tau_{t+1} - tau_t) - (tau_t - tau_{t-1}))^2

that is the solution of ``(I + lam * D2' D2) tau = y`` where ``D2`` is the ``(T-2) x T``
second difference operator. The matrix is symmetric positive definite with bandwidth 2, so
it is solved with a banded Cholesky factorization in O(T).
"""

import logging
import math

import numpy as np
from scipy.linalg import solveh_banded

from ..errors import NegativeLambda, SeriesTooShort
from ..models.decomposedseries import DecomposedSeries
from ..models.timeseries import TimeSeries

DEFAULT_LAMBDA = 10000.0
"""Default smoothing multiplier, large enough to leave point and shapelet anomalies in the residual"""

logger = logging.getLogger(__name__)


def penalty_bands(length: int, lam: float) -> np.ndarray:
    """Upper banded form of ``I + lam * D2' D2`` as expected by ``scipy.linalg.solveh_banded``

    :param length: Number of samples T (at least 3)
    :param lam: Smoothing multiplier
    :return: Array ``3 x T``: row 0 second super-diagonal, row 1 first super-diagonal, row 2 diagonal
    """
    bands = np.zeros((3, length))
    rows = length - 2
    # each row of D2 is (1, -2, 1) at columns r, r+1, r+2
    bands[2, 0:rows] += 1.0
    bands[2, 1 : rows + 1] += 4.0
    bands[2, 2 : rows + 2] += 1.0
    bands[1, 1 : rows + 1] += -2.0
    bands[1, 2 : rows + 2] += -2.0
    bands[0, 2 : rows + 2] += 1.0
    bands *= lam
    bands[2] += 1.0
    return bands


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if math.isnan(lam) or lam < 0:
        raise NegativeLambda(f"Smoothing multiplier must be nonnegative, got {lam}")
    if math.isinf(lam):
        raise NegativeLambda("Smoothing multiplier must be finite")
    return lam


def hp_trend(values: np.ndarray, lam: float = DEFAULT_LAMBDA) -> np.ndarray:
    """Trend of every row of ``values``

    :param values: Array ``(..., T)``. All the rows share one factorization
    :param lam: Smoothing multiplier
    :return: Trend array with the same shape as ``values``
    :raises SeriesTooShort: When T < 3
    :raises NegativeLambda: When ``lam`` is negative
    """
    lam = _check_lambda(lam)
    values = np.asarray(values, dtype=np.float64)
    length = values.shape[-1]
    if length < 3:
        raise SeriesTooShort(f"HP filter needs at least 3 samples, got {length}")

    if lam == 0.0:
        return values.copy()

    rows = values.reshape(-1, length)
    trend = solveh_banded(penalty_bands(length, lam), rows.T, lower=False, check_finite=False)
    return np.ascontiguousarray(trend.T).reshape(values.shape)


def hp_filter(series: TimeSeries, lam: float = DEFAULT_LAMBDA) -> DecomposedSeries:
    """Decompose each dimension of a series in trend and residual

    :param series: Series to decompose, every dimension is processed separately with the same ``lam``
    :param lam: Smoothing multiplier, 0 returns the input as trend
    :return: Trend and residual, ``trend + residual == series.values``
    """
    trend = hp_trend(series.values, lam)
    residual = series.values - trend
    logger.debug("HP decomposition of '%s' (D=%d, T=%d, lambda=%g)", series.id, series.dims, series.length, lam)
    return DecomposedSeries(trend, residual, lam)
