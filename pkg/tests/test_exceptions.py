"""Typed exception hierarchy."""

import pytest

from multieuler import (
    AnalysisException,
    EnumerationCapException,
    ExtractionException,
    GrammarException,
    InterlacingException,
    MultiEulerException,
    NegativeEntryException,
    PolynomialException,
    ValidationException,
)
from multieuler.exceptions import DegreeBoundException, NotDivisibleException


class TestExceptionHierarchy:
    """Every error is a MultiEulerException carrying message and detail."""

    @pytest.mark.parametrize(
        "cls",
        [
            ValidationException,
            PolynomialException,
            NotDivisibleException,
            DegreeBoundException,
            GrammarException,
            ExtractionException,
            EnumerationCapException,
            NegativeEntryException,
            AnalysisException,
            InterlacingException,
        ],
    )
    def test_subclass_of_base(self, cls):
        assert issubclass(cls, MultiEulerException)

    def test_detail_is_appended(self):
        exc = MultiEulerException("Broken", detail="row 3")
        assert str(exc) == "Broken: row 3"
        assert exc.message == "Broken"
        assert exc.context == {}

    def test_context(self):
        exc = ValidationException("Bad n", context={"n": 0})
        assert exc.context["n"] == 0
        assert str(exc) == "Bad n"

    def test_cap_message(self):
        exc = EnumerationCapException("Enumeration of C exceeds cap", family="C", n=7, cap=6)
        assert str(exc) == "Enumeration of C exceeds cap (n=7, cap=6)"
        assert exc.family == "C"

    def test_degree_bound_message(self):
        exc = DegreeBoundException("Too big", degree=4, bound=3)
        assert "(degree 4 > 3)" in str(exc)
        assert isinstance(exc, PolynomialException)

    def test_extraction_reason(self):
        exc = ExtractionException("not divisible", reason="not divisible", grammar="G4")
        assert exc.reason == "not divisible"
        assert exc.grammar == "G4"
        assert isinstance(exc, GrammarException)

    def test_interlacing_is_analysis(self):
        exc = InterlacingException("common root", reason="common root")
        assert isinstance(exc, AnalysisException)
        assert exc.reason == "common root"
