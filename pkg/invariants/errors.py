class DomainError(ValueError):
    """A violated precondition (non-coprime input, even level, zero divisor, ...)."""


class CrossCheckError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
