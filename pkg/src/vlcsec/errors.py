"""Exception taxonomy shared across the package.

Three failure families are kept apart so callers (and the CLI exit-code
mapping) can react differently to each:

* bad arguments or configuration  -> ParameterError
* a numerical routine failed to converge to its target -> NumericError
* an internal cross-check tripped, which indicates a transcription bug
  rather than bad input -> ConsistencyError
"""

from __future__ import annotations


class ParameterError(ValueError):
    """Raised when an argument or configuration value is outside its domain."""


class NumericError(RuntimeError):
    """Raised when a quadrature or contour evaluation cannot reach its target
    accuracy. The message carries diagnostics (argument values, error
    estimates) to make the failure reproducible."""


class ConsistencyError(RuntimeError):
    """Raised when an internal invariant fails, e.g. a probability lands
    outside [0, 1] by more than rounding noise. Signals a coding or
    transcription error, not a user error."""
