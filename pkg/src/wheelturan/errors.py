"""Exception hierarchy shared by every module."""

from __future__ import annotations


class WheelTuranError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(WheelTuranError, ValueError):
    pass


class CapacityExceeded(WheelTuranError):
    """Raised when an input exceeds a hard size guard (order cap, search guard)."""


class RangeEmpty(WheelTuranError, ValueError):
    pass


class Graph6ParseError(WheelTuranError, ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
