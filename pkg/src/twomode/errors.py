"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A scalar or matrix argument is outside its allowed domain."""


class InvalidStateError(ValueError):
    """A covariance matrix violates the uncertainty principle."""


class NumericalDomainError(ArithmeticError):
    """A quantity left its mathematical domain by more than round-off."""
