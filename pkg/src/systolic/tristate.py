"""Three-valued verdicts for bounded decision procedures."""

from __future__ import annotations

from enum import Enum


class TriState(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    @classmethod
    def of(cls, value: bool | TriState) -> TriState:
        if isinstance(value, TriState):
            return value
        return cls.YES if value else cls.NO

    def __and__(self, other) -> TriState:
        other = TriState.of(other)
        if TriState.NO in (self, other):
            return TriState.NO
        if self is other is TriState.YES:
            return TriState.YES
        return TriState.UNKNOWN

    __rand__ = __and__

    @property
    def code(self) -> str:
        """Short form used in machine-readable records: Y, N or Unknown."""
        return {"Yes": "Y", "No": "N", "Unknown": "Unknown"}[self.value]

    def __str__(self) -> str:
        return self.value
