"""multieuler - descent polynomials of multiset permutations.

Exact constructions of the descent polynomials P_n, Q_n of the multiset
permutations of {1,1,...,n,n} and {1,1,...,n,n,n+1}, and S_n, T_n of their
signed versions, by five independent methods (enumeration, coefficient
recurrences, a differential system, context-free grammars and
s-inversion sequences), together with checks of their structure:
gamma and bi-gamma positivity, unimodality, real-rootedness, interlacing
and rational generating functions.

Example:
    Basic usage:

    >>> from multieuler import family_polynomial, positivity_report, family_center
    >>> S3 = family_polynomial("S", 3, "rec")
    >>> S3.int_coeffs()
    [1, 209, 1884, 2828, 811, 27]
    >>> positivity_report(S3, family_center("S", 3)).bi_gamma_positive
    True

Classes:
    UniPoly: Dense univariate polynomial over the rationals
    FormalPoly: Laurent polynomial in the letters x, y, w, q
    Grammar: Context-free grammar acting as a formal derivative
    TriTable: Coefficient triangle of a family
    GammaTable: Gamma coefficient rows
    SuiteReport: Result of a verification suite

Constants:
    AVAILABLE_FAMILIES: {"P", "Q", "S", "T"}
    AVAILABLE_METHODS: {"enum", "rec", "diffsys", "grammar", "invseq"}
    AVAILABLE_SUITES: names accepted by :func:`verify_suite`

Logging:
    configure_logging: Configure log levels for the package or individual modules
    get_logger: Retrieve a named logger by module path or short alias
    LOGGER_NAMES: Mapping of short aliases to full logger names

Exceptions:
    MultiEulerException: Base exception class
    ValidationException: Invalid user input
    PolynomialException: Exact polynomial operation failed
    GrammarException: Unknown grammar or missing rule
    ExtractionException: Grammar output has no univariate reading
    EnumerationCapException: Enumeration beyond the configured cap
    IntegralityException: Non-integral coefficient where integers are expected
    NegativeEntryException: Negative gamma table entry
    AnalysisException: Decomposition or root analysis failed
    InterlacingException: Interlacing precondition failed
"""

__version__ = "0.1.0"
__license__ = "Apache-2.0"

from multieuler.config import AVAILABLE_FAMILIES, AVAILABLE_METHODS, AVAILABLE_SUITES
from multieuler.logging_config import configure_logging, get_logger, LOGGER_NAMES
from multieuler.model.poly import UniPoly
from multieuler.model.formal import FormalPoly
from multieuler.model.table import TriTable, GammaTable
from multieuler.model.report import SuiteReport
from multieuler.grammar import Grammar, builtin_grammar, iterate_pair
from multieuler.enumeration import distribution, gen_family, inv_seq_eulerian
from multieuler.analysis import (
    gamma_vector,
    positivity_report,
    real_root_certificate,
    strictly_interlaces,
    symmetric_decompose,
)
from multieuler.families import family_center, family_polynomial
from multieuler.suites import verify_suite
from multieuler.exceptions import (
    MultiEulerException,
    ValidationException,
    PolynomialException,
    GrammarException,
    ExtractionException,
    EnumerationCapException,
    IntegralityException,
    NegativeEntryException,
    AnalysisException,
    InterlacingException,
)

__all__ = [
    "UniPoly",
    "FormalPoly",
    "Grammar",
    "TriTable",
    "GammaTable",
    "SuiteReport",
    "builtin_grammar",
    "iterate_pair",
    "distribution",
    "gen_family",
    "inv_seq_eulerian",
    "gamma_vector",
    "positivity_report",
    "real_root_certificate",
    "strictly_interlaces",
    "symmetric_decompose",
    "family_center",
    "family_polynomial",
    "verify_suite",
    "AVAILABLE_FAMILIES",
    "AVAILABLE_METHODS",
    "AVAILABLE_SUITES",
    # Logging
    "configure_logging",
    "get_logger",
    "LOGGER_NAMES",
    # Exceptions
    "MultiEulerException",
    "ValidationException",
    "PolynomialException",
    "GrammarException",
    "ExtractionException",
    "EnumerationCapException",
    "IntegralityException",
    "NegativeEntryException",
    "AnalysisException",
    "InterlacingException",
    "__version__",
]
