# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from ..models.enumstr import EnumStr


class InjectionKind(EnumStr):
    """Anomaly injection methods available to the augmented set builder"""

    POINT_SCALE = None
    """Scale one sample of the suspect window (time domain)"""

    EXCHANGE = None
    """Copy a span of another window into the suspect window (time domain)"""

    MIXUP = None
    """Blend a span with another window (time domain)"""

    FREQ_ANOMALY = None
    """Alter the spectrum of a span (frequency domain)"""

    SLOW_SLOPE = None
    """Add a slow ramp to a span (time domain)"""

    @property
    def is_frequency(self) -> bool:
        return self == InjectionKind.FREQ_ANOMALY


InjectionKind.POINT_SCALE = InjectionKind("point_scale")
InjectionKind.EXCHANGE = InjectionKind("exchange")
InjectionKind.MIXUP = InjectionKind("mixup")
InjectionKind.FREQ_ANOMALY = InjectionKind("freq_anomaly")
InjectionKind.SLOW_SLOPE = InjectionKind("slow_slope")
