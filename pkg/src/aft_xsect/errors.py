"""Exception hierarchy for aft_xsect.

Numerical failures are never silent: every quadrature, root-finder, and
matrix inverse either returns a trustworthy value or raises one of these.
"""


class AftError(Exception):
    """Base class for all aft_xsect errors."""


class QuadratureError(AftError):
    """An integral failed to converge to the requested tolerance."""


class ModelValidationError(AftError):
    """A model specification violates one of its regularity conditions."""


class DomainError(AftError):
    """Evaluation requested outside the domain of a model object."""


class NoSolutionError(AftError):
    """The moment equation of the parametric preliminary estimator has no root."""


class NoRootError(AftError):
    """The covariate estimating equation has no root for the given sample."""


class NewtonError(AftError):
    """Newton iteration failed to converge; carries the iteration trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []


class IllConditionedError(AftError):
    """A matrix needed in an inverse is singular or numerically singular."""


class DataFormatError(AftError):
    """An input file does not match the expected schema."""
