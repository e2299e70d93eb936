"""Exception types shared across the package."""


class EllgtError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EllgtError, ValueError):
    """An argument lies outside the mathematical domain of the function."""


class PoleError(EllgtError, ArithmeticError):
    """Evaluation point is too close to a pole."""


class DegenerateParametersError(EllgtError, ArithmeticError):
    """A theta function in a denominator is numerically zero.

    Raised when |theta(.)| < 1e-14 in a denominator; callers are expected
    to resample their parameters.
    """


class EnumerationLimitError(EllgtError, ValueError):
    """The configuration-sum oracle would exceed its state-count cap."""
