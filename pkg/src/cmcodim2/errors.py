"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CMError(Exception):
    """Base class for all library errors."""


class UsageError(CMError, ValueError):
    """Caller passed structurally incompatible inputs (e.g. mixed variable sets)."""


class PreconditionError(CMError, ValueError):
    """An operation's mathematical precondition does not hold."""


class DomainError(CMError, ValueError):
    """The input is well formed but outside the domain the operation handles.

    ``reason`` is a short machine-readable tag surfaced by the CLI.
    """

    def __init__(self, message: str, reason: str | None = None):
        super().__init__(message)
        self.reason = reason or message


class MonomialParseError(UsageError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
