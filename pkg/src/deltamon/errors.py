"""Exception hierarchy shared by the library, the service, and the CLI.

Each error carries a stable ``code`` so the service can map it to an HTTP
status and the CLI to an exit code without string matching.
"""

from __future__ import annotations


class DeltamonError(Exception):
    """Base class for all library errors."""

    code = "error"


class ParseError(DeltamonError):
    """Bad text input; ``position`` is a 0-based offset into the source."""

    code = "parse"

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class PreconditionError(DeltamonError):
    """An operation was called outside its stated preconditions."""

    code = "precondition"


class ArityMismatchError(PreconditionError):
    """Operands live in rings with different numbers of variables."""


class KindMismatchError(PreconditionError):
    """Operands are presented under different closure kinds."""


class CapExceededError(DeltamonError):
    """A configured search or state cap was exceeded; never silently truncated."""

    code = "cap_exceeded"
