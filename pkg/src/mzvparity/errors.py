"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["DomainError", "MzvError", "NonAdmissibleError", "ParityError"]


class MzvError(Exception):
    """Base class for package errors."""


class NonAdmissibleError(MzvError, ValueError):
    """Raised when an operation requires an admissible (convergent) index."""


class ParityError(MzvError, ValueError):
    """Raised when weight and depth have the same parity but must not."""


class DomainError(MzvError, ValueError):
    """Raised when an evaluation point lies outside the supported domain."""
