"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """An input violates a documented precondition (bad parameters, bad u, ...)."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed an explicit size guard."""
