# SPDX-FileCopyrightText: Copyright (c) 2026 TFAD contributors
#
# SPDX-License-Identifier: MIT

from typing import Self


class EnumStr:
    """Enum like base class whose members are identified by their name

    The name is also the value written in configuration files, checkpoints and reports.
    Members are assigned after the subclass body, for example:

    .. code-block:: python

        class Branch(EnumStr):
            TIME_TREND = None

        Branch.TIME_TREND = Branch("time_trend")
    """

    def __init__(self, name: str):
        self._name = name

    @property
    def name(self) -> str:
        """Member name"""
        return self._name

    def __str__(self) -> str:
        return self._name

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._name!r})"

    def __eq__(self, other):
        if isinstance(other, EnumStr):
            return self._name == other._name
        elif isinstance(other, str):
            return self._name == other
        else:
            return False

    def __hash__(self) -> int:
        return hash(self._name)

    @classmethod
    def members(cls) -> list[Self]:
        """All the members in declaration order"""
        return [v for k, v in cls.__dict__.items() if not k.startswith("_") and isinstance(v, cls)]

    @classmethod
    def parse(cls, value: str) -> Self | None:
        """Return the member named ``value`` (case insensitive) or ``None``"""
        if isinstance(value, cls):
            return value
        if not value or not isinstance(value, str):
            return None

        value = value.lower()

        for v in cls.members():
            if v._name.lower() == value:
                return v

        return None
