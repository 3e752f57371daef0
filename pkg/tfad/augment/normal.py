# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.augment.normal`

Generation of extra normal samples. Both operations return unlabeled (all 0) series.
"""

import numpy as np

from ..errors import InvalidParameter
from ..models.rngseed import as_rng
from ..models.timeseries import TimeSeries
from ..signal.hpfilter import hp_trend
from ..signal.spectral import SpectralVector, idft, interleave


def smooth_normal(series: TimeSeries, lam: float) -> TimeSeries:
    """HP trend of the series as a noise free normal sample

    :param series: Source series, assumed free of anomalies
    :param lam: HP smoothing multiplier
    """
    return series.replace(values=hp_trend(series.values, lam), labels=np.zeros(series.length, dtype=np.int8))


def augment_normal_freq(series: TimeSeries, scale: float, rng) -> TimeSeries:
    """Add small Gaussian changes to the real and imaginary parts of every spectrum

    :param series: Source series
    :param scale: Noise standard deviation relative to the RMS of the interleaved spectrum
    :param rng: :py:class:`~tfad.models.rngseed.RngSeed`, seed or numpy generator

    Only bins ``1 .. floor((N-1)/2)`` are perturbed, bins ``N-k`` receive the conjugate so the
    inverse transform is real. DC (and Nyquist for even N) are left untouched.
    """
    scale = float(scale)
    if not np.isfinite(scale) or scale < 0:
        raise InvalidParameter(f"Perturbation scale must be nonnegative, got {scale}")

    gen = as_rng(rng)
    n = series.length
    half = (n - 1) // 2
    bins = np.arange(1, half + 1)
    out = np.empty_like(series.values)

    for d in range(series.dims):
        spectrum = np.fft.fft(series.values[d])
        if scale > 0 and half > 0:
            rms = float(np.sqrt(np.mean(interleave(spectrum) ** 2)))
            noise = gen.normal(0.0, scale * rms, size=(half, 2))
            spectrum[bins] += noise[:, 0] + 1j * noise[:, 1]
            spectrum[n - bins] = np.conj(spectrum[bins])
        out[d] = idft(SpectralVector.from_complex(spectrum))

    return series.replace(values=out, labels=np.zeros(n, dtype=np.int8))
