# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

import numpy as np

from ..models.rngseed import as_rng
from ..models.timeseries import TimeSeries
from .structuralconfig import StructuralConfig


def generate_structural(cfg: StructuralConfig, rng, id: str = "synthetic") -> TimeSeries:
    """Sum of sinusoids, trend and Gaussian noise, labels all 0

    :param cfg: Structural model
    :param rng: Seed, :py:class:`~tfad.models.rngseed.RngSeed` or numpy generator
    :param id: Identifier of the generated series
    """
    gen = as_rng(rng)
    t = np.arange(cfg.length, dtype=np.float64)
    values = np.zeros((cfg.dims, cfg.length))

    for d in range(cfg.dims):
        for a, b, omega in cfg.components:
            phase = 0.0 if d == 0 else gen.uniform(0.0, 1.0 / omega)
            angle = 2.0 * np.pi * omega * (t + phase)
            values[d] += a * np.sin(angle) + b * np.cos(angle)

    values += cfg.trend_values()
    if cfg.noise_std > 0:
        values += gen.normal(0.0, cfg.noise_std, size=values.shape)

    return TimeSeries(id, values, np.zeros(cfg.length, dtype=np.int8))
