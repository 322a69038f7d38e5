"""IR-based test-case selection decision support.

Builds feature-variant document corpora, extracts terms, scores
test-case-to-product similarity under VSM and LSA, and evaluates the results
with differential similarity, test-case rankings, mean average precision,
and repeated-measures randomization tests.
"""

from tcselect.errors import ConfigError, DataError, NumericalError, TcselectError

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DataError",
    "NumericalError",
    "TcselectError",
    "__version__",
]
