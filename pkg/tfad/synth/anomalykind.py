# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from ..models.enumstr import EnumStr


class AnomalyKind(EnumStr):
    """Anomaly taxonomy used by the synthetic benchmark"""

    GLOBAL_POINT = None
    """A point far outside the global range of the series"""

    CONTEXT_POINT = None
    """A point inside the global range but far from its local neighbourhood"""

    SHAPELET = None
    """A subsequence whose waveform shape changes"""

    SEASONAL = None
    """A subsequence with abnormal seasonality"""

    TREND = None
    """A subsequence whose trend departs from the series trend"""

    @property
    def is_point(self) -> bool:
        return self._name.endswith("point")


AnomalyKind.GLOBAL_POINT = AnomalyKind("global_point")
AnomalyKind.CONTEXT_POINT = AnomalyKind("context_point")
AnomalyKind.SHAPELET = AnomalyKind("shapelet")
AnomalyKind.SEASONAL = AnomalyKind("seasonal")
AnomalyKind.TREND = AnomalyKind("trend")
