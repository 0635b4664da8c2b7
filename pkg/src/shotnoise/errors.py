"""Exception and warning types raised across the package."""


class ShotNoiseError(Exception):
    """Base class for package errors."""


class DomainError(ShotNoiseError, ValueError):
    """An argument lies outside the domain of a function."""


class InvalidParameterError(ShotNoiseError, ValueError):
    """A law, response or model was built with inadmissible parameters."""


class UnsupportedOperationError(ShotNoiseError, NotImplementedError):
    """The requested quantity is not available for this object
    (e.g. the Laplace transform of a log-Cauchy law)."""


class NumericalError(ShotNoiseError, ArithmeticError):
    """A numerical routine failed to reach its accuracy target."""


class InvalidTransformError(NumericalError):
    """A computed function is not a valid Laplace transform of a
    probability law on the half-line."""


class SingularIntegrandError(NumericalError):
    """An improper integral diverges at its lower endpoint."""


class DivergenceError(ShotNoiseError):
    """The shot noise series does not converge for the given model."""


class ToleranceUnreachableError(NumericalError):
    """A truncation horizon large enough for the requested tolerance
    exceeds the configured cap."""


class TruncationBoundError(NumericalError):
    """No usable truncation bound exists for the response function."""


class InsufficientDataError(ShotNoiseError, ValueError):
    """Too few observations fall in the region an estimator needs."""


class InversionWarning(UserWarning):
    """Numerical Laplace inversion may not have reached the target accuracy."""


class PositivityWarning(UserWarning):
    """A background driving transform has log Psi(s) > 0 somewhere."""


class SmallSampleWarning(UserWarning):
    """Fewer observations than an estimator is tuned for."""


class MonotonicityWarning(UserWarning):
    """A sequence expected to approach its limit monotonically oscillates."""
