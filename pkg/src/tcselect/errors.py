"""Exception hierarchy shared by all subsystems.

The CLI maps these onto process exit codes: ConfigError -> 1,
DataError -> 2, NumericalError -> 3.
"""


class TcselectError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(TcselectError):
    """Invalid run configuration (bad key, missing required field, ...)."""


class DataError(TcselectError):
    """Invalid input data: dangling impacts, empty corpora, schema violations."""


class NumericalError(TcselectError):
    """Numerical failure, e.g. SVD non-convergence or rank deficiency."""
