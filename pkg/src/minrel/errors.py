"""Exception types shared across the package."""


class MinrelError(Exception):
    """Base class for all package errors."""


class InvalidInputError(MinrelError, ValueError):
    """Input data or arguments violate an operation's contract."""
