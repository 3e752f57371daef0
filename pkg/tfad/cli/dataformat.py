# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from ..models.enumstr import EnumStr


class DataFormat(EnumStr):
    """Dataset file formats"""

    CSV = None
    """One series per file, header ``timestamp,value[,value_2,...][,label]``"""

    NDJSON = None
    """One JSON object per line and per series: ``id``, ``values``, optional ``labels``"""

    @classmethod
    def from_path(cls, path) -> "DataFormat | None":
        suffix = str(path).lower().rsplit(".", 1)[-1]
        if suffix == "csv":
            return cls.CSV
        if suffix in ("ndjson", "jsonl"):
            return cls.NDJSON
        return None


DataFormat.CSV = DataFormat("csv")
DataFormat.NDJSON = DataFormat("ndjson")
