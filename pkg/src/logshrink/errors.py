"""Exception types raised across the package."""


class LogShrinkError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(LogShrinkError):
    """Input data violates a precondition (shape, finiteness, symmetry, ...)."""


class NotPositiveDefiniteError(LogShrinkError):
    """A matrix required to be positive definite is not."""


class NumericalError(LogShrinkError):
    """A numerical routine failed (overflow, eigensolver breakdown, ...)."""


class ConfigurationError(LogShrinkError):
    """Inconsistent or incomplete configuration (unresolved center, bad family, ...)."""


class NoMinimumError(LogShrinkError):
    """The requested optimization problem is unbounded below."""


class ConvergenceError(NumericalError):
    """Iteration budget exhausted before convergence.

    Carries the last iterate in ``outcome`` so callers can inspect it.
    """

    def __init__(self, message, outcome=None):
        super().__init__(message)
        self.outcome = outcome


class ConvexityViolationError(NumericalError):
    """A Hessian that must be positive semidefinite is indefinite."""


class DegenerateHessianError(NumericalError):
    """The closed-form Newton system is numerically singular."""


class TuningError(LogShrinkError):
    """Every grid point of a tuning run failed.

    ``per_eta_errors`` maps the grid value to the error message it produced.
    """

    def __init__(self, message, per_eta_errors=None):
        super().__init__(message)
        self.per_eta_errors = dict(per_eta_errors or {})


class MalformedInputError(InvalidInputError):
    """A data file could not be parsed into the expected layout."""


class SingularSpectrumWarning(UserWarning):
    """Emitted when an operation silently drops zero sample eigenvalues."""
