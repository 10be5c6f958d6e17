from __future__ import annotations


class UGQSymError(Exception):
    """Base class for every error raised by this package."""


class DomainError(UGQSymError, ValueError):
    """An argument lies outside the domain of the operation."""


class CapacityError(UGQSymError):
    """A configured size limit would be exceeded."""


class ParseError(UGQSymError, ValueError):
    """Malformed textual input (graph6 or edge list)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset
