# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from ..models.enumstr import EnumStr


class FreqMode(EnumStr):
    """Spectrum operation applied by a frequency domain anomaly injection"""

    SCALE_BIN = None
    """Multiply the dominant bin pair by ``1 + magnitude``"""

    ZERO_BIN = None
    """Zero the ``ceil(magnitude)`` (at least one) dominant bin pairs"""

    SHIFT_PEAK = None
    """Move the dominant bin pair by ``ceil(magnitude)`` bins"""


FreqMode.SCALE_BIN = FreqMode("scale_bin")
FreqMode.ZERO_BIN = FreqMode("zero_bin")
FreqMode.SHIFT_PEAK = FreqMode("shift_peak")
