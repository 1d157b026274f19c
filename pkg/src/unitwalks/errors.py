"""Exception types shared across the package."""


class UnitwalksError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(UnitwalksError, ValueError):
    """An argument violates a documented precondition."""


class ResourceLimitError(UnitwalksError, RuntimeError):
    """A brute-force computation would exceed its configured size cap."""
