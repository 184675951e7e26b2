"""
Exception hierarchy for divgraph.

The CLI maps these onto exit codes: VerificationError -> 1,
InvalidInputError -> 2, SizeGuardError -> 3.
"""

from typing import Any, Dict, Optional


class DivGraphError(Exception):
    """Base class for all divgraph errors."""


class InvalidInputError(DivGraphError, ValueError):
    """Raised when an argument is malformed (n = 0, bad exponent vector, length mismatch)."""


class PreconditionError(InvalidInputError):
    """Raised when the hypotheses of a theorem or construction are not met."""


class SizeGuardError(DivGraphError):
    """Raised when a request exceeds a configured size guard."""

    def __init__(self, what: str, requested: int, limit: int, setting: str):
        self.what = what
        self.requested = requested
        self.limit = limit
        self.setting = setting
        super().__init__(
            f"{what} of size {requested} exceeds the configured limit {limit}. "
            f"Raise it with the DIVGRAPH_{setting.upper()} environment variable "
            f"or DivGraphConfig({setting}=...)"
        )


class VerificationError(DivGraphError):
    """Raised when an exact check fails."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.details = details or {}
        super().__init__(message)


class CertificationError(VerificationError):
    """Raised when a modular nullity cannot be certified."""


def check_guard(what: str, requested: int, limit: int, setting: str) -> None:
    """Raise SizeGuardError when requested exceeds limit"""
    if requested > limit:
        raise SizeGuardError(what, requested, limit, setting)
