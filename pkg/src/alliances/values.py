"""Extended naturals: a finite cardinality or +infinity.

Arithmetic follows the conventions the alliance bounds need:
``inf + x = inf``, ``inf * c = inf`` for ``c >= 1`` and ``inf * 0 = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Union

INF_TOKEN = "inf"


@total_ordering
@dataclass(frozen=True)
class AllianceValue:
    """``AllianceValue(c)`` is finite, ``AllianceValue(None)`` is infinite."""

    finite: int | None

    def __post_init__(self) -> None:
        if self.finite is not None and self.finite < 0:
            raise ValueError(f"alliance values are non-negative, got {self.finite}")

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    @property
    def is_finite(self) -> bool:
        return self.finite is not None

    def __add__(self, other: ValueLike) -> AllianceValue:
        other = ext(other)
        if self.is_infinite or other.is_infinite:
            return INF
        return AllianceValue(self.finite + other.finite)

    __radd__ = __add__

    def __mul__(self, other: ValueLike) -> AllianceValue:
        other = ext(other)
        if self.finite == 0 or other.finite == 0:
            return AllianceValue(0)
        if self.is_infinite or other.is_infinite:
            return INF
        return AllianceValue(self.finite * other.finite)

    __rmul__ = __mul__

    def __sub__(self, other: int) -> AllianceValue:
        if self.is_infinite:
            return INF
        return AllianceValue(self.finite - other)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int):
            other = AllianceValue(other)
        if not isinstance(other, AllianceValue):
            return NotImplemented
        if self.is_infinite:
            return False
        return other.is_infinite or self.finite < other.finite

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.finite == other
        if isinstance(other, AllianceValue):
            return self.finite == other.finite
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.finite)

    def __int__(self) -> int:
        if self.finite is None:
            raise OverflowError("cannot convert an infinite alliance value to int")
        return self.finite

    def __str__(self) -> str:
        return INF_TOKEN if self.finite is None else str(self.finite)

    def __repr__(self) -> str:
        return "INF" if self.finite is None else f"AllianceValue({self.finite})"

    def to_json(self) -> int | str:
        return INF_TOKEN if self.finite is None else self.finite

    @classmethod
    def from_json(cls, value: int | str) -> AllianceValue:
        if value == INF_TOKEN:
            return INF
        return cls(int(value))


ValueLike = Union[AllianceValue, int]

INF = AllianceValue(None)

# alias used where the values are plain extended-natural arithmetic
ExtNat = AllianceValue


def ext(value: ValueLike) -> AllianceValue:
    if isinstance(value, AllianceValue):
        return value
    return AllianceValue(int(value))


def ext_min(*values: ValueLike) -> AllianceValue:
    """Minimum over extended naturals; infinite only if every value is."""
    return min((ext(v) for v in values), default=INF)
