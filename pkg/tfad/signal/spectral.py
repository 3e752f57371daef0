# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT
"""
`tfad.signal.spectral`

Discrete Fourier transform with real and imaginary parts interleaved::

    X_k = sum_n x_n * exp(-i 2 pi k n / N),   k = 0 .. N-1
    data = [Re_0, Im_0, Re_1, Im_1, ..., Re_{N-1}, Im_{N-1}]

The DC term (k = 0) is kept so that the level of the window is not lost.
"""

import numpy as np

from ..errors import AsymmetricSpectrum, EmptyWindow

SYMMETRY_TOLERANCE = 1e-6


def interleave(spectrum: np.ndarray) -> np.ndarray:
    """Complex array ``(..., N)`` to real array ``(..., 2N)`` laid out Re, Im, Re, Im..."""
    return np.stack((spectrum.real, spectrum.imag), axis=-1).reshape(*spectrum.shape[:-1], 2 * spectrum.shape[-1])


def deinterleave(data: np.ndarray) -> np.ndarray:
    """Inverse of :py:func:`interleave`"""
    data = np.asarray(data, dtype=np.float64)
    pairs = data.reshape(*data.shape[:-1], data.shape[-1] // 2, 2)
    return pairs[..., 0] + 1j * pairs[..., 1]


def symmetry_error(spectrum: np.ndarray) -> float:
    """Largest deviation from ``X_k = conj(X_{N-k})``, relative to ``max(1, max|X|)``"""
    n = spectrum.shape[-1]
    mirrored = np.conj(spectrum[..., (-np.arange(n)) % n])
    scale = max(1.0, float(np.max(np.abs(spectrum))))
    return float(np.max(np.abs(spectrum - mirrored))) / scale


class SpectralVector:
    """Interleaved spectrum of a real window

    :param data: ``2N`` reals ``[Re_0, Im_0, ..., Re_{N-1}, Im_{N-1}]``
    """

    def __init__(self, data):
        data = np.array(data, dtype=np.float64).reshape(-1)
        if data.size == 0 or data.size % 2:
            raise EmptyWindow(f"Interleaved spectrum needs an even, nonzero number of values, got {data.size}")
        data.setflags(write=False)
        self._data = data

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def n(self) -> int:
        """Original window length N"""
        return self._data.size // 2

    @property
    def real(self) -> np.ndarray:
        return self._data[0::2]

    @property
    def imag(self) -> np.ndarray:
        return self._data[1::2]

    def to_complex(self) -> np.ndarray:
        return deinterleave(self._data)

    @classmethod
    def from_complex(cls, spectrum: np.ndarray) -> "SpectralVector":
        return cls(interleave(np.asarray(spectrum)))

    def __len__(self) -> int:
        return self._data.size

    def __repr__(self) -> str:
        return f"SpectralVector(n={self.n})"


def dft_interleaved(window) -> SpectralVector:
    """Discrete Fourier transform of a real window, interleaved

    :param window: ``N`` real samples
    :return: Spectrum of the window
    :raises EmptyWindow: When ``N == 0``
    """
    window = np.asarray(window, dtype=np.float64).reshape(-1)
    if window.size == 0:
        raise EmptyWindow("Cannot transform an empty window")
    return SpectralVector.from_complex(np.fft.fft(window))


def idft(spec: SpectralVector) -> np.ndarray:
    """Inverse transform of a conjugate symmetric spectrum

    :param spec: Spectrum, ``X_k = conj(X_{N-k})`` must hold within ``1e-6`` (relative)
    :return: ``N`` real samples, the imaginary residue of the inverse is discarded
    :raises AsymmetricSpectrum: When the symmetry tolerance is exceeded
    """
    if not isinstance(spec, SpectralVector):
        spec = SpectralVector(spec)
    spectrum = spec.to_complex()
    error = symmetry_error(spectrum)
    if error > SYMMETRY_TOLERANCE:
        raise AsymmetricSpectrum(f"Spectrum is not conjugate symmetric (relative error {error:.3g})")
    return np.fft.ifft(spectrum).real


def spectral_features(values: np.ndarray) -> np.ndarray:
    """Interleaved spectra of every row, scaled by ``1/sqrt(N)``

    :param values: Array ``(..., N)``
    :return: Array ``(..., 2N)``

    The orthonormal scaling keeps the energy of the spectrum equal to the energy of the window,
    so that windows of different length produce comparable inputs for the encoders.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.shape[-1] == 0:
        raise EmptyWindow("Cannot transform an empty window")
    return interleave(np.fft.fft(values, axis=-1) / np.sqrt(values.shape[-1]))
