"""Exception hierarchy shared by every module of the package."""


class ModpartError(Exception):
    """Base class for all errors raised by modpart."""


class ParameterError(ModpartError, ValueError):
    """An argument is outside the range an operation accepts."""


class DomainError(ModpartError, ValueError):
    """A partition does not satisfy the precondition of a classifier."""


class TruncationError(ModpartError, LookupError):
    """A coefficient was requested beyond the known q-degree of a series."""
