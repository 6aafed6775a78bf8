"""Domain errors shared by the library, the CLI and the HTTP layer."""
from typing import Optional


class HypergraphError(ValueError):
    """Base class for every error raised on bad input or exhausted resources."""


class InvalidHypergraphError(HypergraphError):
    pass


class NotVeblenError(HypergraphError):
    pass


class NotEulerianError(HypergraphError):
    pass


class CapExceededError(HypergraphError):
    """A documented search cap (or the time budget) was hit."""

    def __init__(self, cap: str, limit, actual=None):
        self.cap = cap
        self.limit = limit
        self.actual = actual
        detail = f"{cap} exceeded: limit {limit}"
        if actual is not None:
            detail += f", got {actual}"
        super().__init__(detail)


class HypergraphParseError(HypergraphError):
    def __init__(self, message: str, line: int, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{where}: {message}")


class InconsistencyError(HypergraphError):
    """An exactness assertion failed; indicates a bug, never bad input."""
