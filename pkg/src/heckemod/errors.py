"""Exception hierarchy shared by every engine."""


class HeckeError(Exception):
    """Base class for all engine errors."""


class ValidationError(HeckeError, ValueError):
    """Inputs violate an operation's preconditions."""


class ResourceCapError(HeckeError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class InvariantError(HeckeError):
    """An internal consistency check failed; signals a bug, not bad input."""


class InterpolationError(InvariantError):
    """A held-out sample disagrees with the interpolating polynomial."""
