"""Exception taxonomy shared by all queryforge modules.

Each class maps to exactly one HTTP status at the service layer:
ValidationError -> 400, NotFoundError -> 404, StaleFeedbackError -> 409,
BackendError -> 502.  ReplayError and EmptyIndexError never cross the API
boundary (they surface in the CLI and at startup, respectively).
"""

from __future__ import annotations


class QueryForgeError(Exception):
    """Base class for all queryforge errors."""


class ValidationError(QueryForgeError):
    """Malformed input or a violated precondition."""


class NotFoundError(QueryForgeError):
    """A referenced document, session, or instruction does not exist."""


class StaleFeedbackError(QueryForgeError):
    """Feedback referenced a document that is not in the latest retrieval."""


class EmptyIndexError(QueryForgeError):
    """An index build was attempted over zero documents."""


class BackendError(QueryForgeError):
    """A generator backend failed (unreachable, bad status, malformed body)."""

    def __init__(self, backend_id: str, reason: str):
        super().__init__(f"backend failure: {backend_id}: {reason}")
        self.backend_id = backend_id
        self.reason = reason


class ReplayError(QueryForgeError):
    """A session log could not be replayed."""

    def __init__(self, entry_index: int, reason: str):
        super().__init__(f"replay failed at entry {entry_index}: {reason}")
        self.entry_index = entry_index
        self.reason = reason
