"""Exception types shared across the library."""

from __future__ import annotations


class TuningError(ValueError):
    """Base class for all tuning-related errors."""


class ClosureViolation(TuningError):
    """A step set does not compose to an exact doubling of the octave root."""


class MonotonicityViolation(TuningError):
    """A step fails to strictly raise the pitch."""


class ExactnessError(TuningError):
    """An operation left the exact domain (rational times a power of two)."""


class ParseError(TuningError):
    """A note name does not match the grammar.

    The offending character index is kept in ``position``.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DefinitionError(TuningError):
    """A tuning definition or scale file document is malformed.

    ``line`` holds the 1-based line number of the offending entry when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
