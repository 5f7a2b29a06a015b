class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class GridSizeError(RuntimeError):
    """A sweep would exceed the configured evaluation cap."""
