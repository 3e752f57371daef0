# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from ..models.enumstr import EnumStr


class Branch(EnumStr):
    """Representation branch: one component (trend or residual) seen in one domain"""

    TIME_TREND = None
    """Trend component, time domain"""

    TIME_RESIDUAL = None
    """Residual component, time domain"""

    FREQ_TREND = None
    """Trend component, frequency domain (interleaved spectrum)"""

    FREQ_RESIDUAL = None
    """Residual component, frequency domain (interleaved spectrum)"""

    @property
    def is_frequency(self) -> bool:
        return self._name.startswith("freq")

    @property
    def is_residual(self) -> bool:
        return self._name.endswith("residual")


Branch.TIME_TREND = Branch("time_trend")
Branch.TIME_RESIDUAL = Branch("time_residual")
Branch.FREQ_TREND = Branch("freq_trend")
Branch.FREQ_RESIDUAL = Branch("freq_residual")
