"""Exception hierarchy shared by every rankspectra module.

Two families matter to callers (and to the CLI's exit-code mapping):

* ``ValidationError`` subclasses signal bad input or configuration.
* ``NumericError`` subclasses signal a numerical procedure that did not
  produce a trustworthy answer for otherwise valid input.
"""

from __future__ import annotations

__all__ = [
    "RankSpectraError",
    "ValidationError",
    "NumericError",
    "DomainError",
    "RangeError",
    "ConfigError",
    "UnknownDistributionError",
    "DegenerateColumnError",
    "DegenerateSpectrumError",
    "ConvergenceError",
    "NumericalError",
    "FitError",
    "IterationLimitWarning",
]


class RankSpectraError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(RankSpectraError, ValueError):
    """Input rejected before any numerical work was attempted."""


class NumericError(RankSpectraError, ArithmeticError):
    """A numerical routine failed on valid input."""


class DomainError(ValidationError):
    """Argument outside the domain on which a function is defined."""


class RangeError(ValidationError):
    """Integer index outside its admissible range."""


class ConfigError(ValidationError):
    """Malformed or inconsistent scenario / estimator configuration."""


class UnknownDistributionError(ConfigError):
    """Spectral distribution identifier or expression not recognised."""


class DegenerateColumnError(ValidationError):
    """A data column has zero sample variance."""


class DegenerateSpectrumError(NumericError):
    """Eigenvalue configuration makes a penalty term undefined."""


class ConvergenceError(NumericError):
    """Root finder or fixed-point iteration exhausted its budget."""


class NumericalError(NumericError):
    """Linear-algebra backend failure (e.g. eigensolver did not converge)."""


class FitError(NumericError):
    """A model fit has no well-defined optimum."""


class IterationLimitWarning(RuntimeWarning):
    """An iterative estimator stopped at its iteration cap; its last value is returned."""
