"""
multieuler Exceptions

This module provides typed exceptions for better error handling and debugging.
"""

from typing import Any, Dict, Optional


class MultiEulerException(Exception):
    """Base exception for all multieuler errors."""

    def __init__(self, message: str, detail: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        self.message = message
        self.detail = detail
        self.context = context or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.detail:
            return f"{self.message}: {self.detail}"
        return self.message


class ValidationException(MultiEulerException):
    """Raised when user input (family, method, n, ...) is invalid."""
    pass


class PolynomialException(MultiEulerException):
    """Raised when an exact polynomial operation cannot be carried out."""

    def __init__(self, message: str, degree: Optional[int] = None, **kwargs):
        self.degree = degree
        super().__init__(message, **kwargs)


class NotDivisibleException(PolynomialException):
    """Raised when an exact division leaves a remainder."""
    pass


class DegreeBoundException(PolynomialException):
    """Raised when a polynomial exceeds the declared degree."""

    def __init__(self, message: str, bound: Optional[int] = None, **kwargs):
        self.bound = bound
        super().__init__(message, **kwargs)

    def __str__(self) -> str:
        base_msg = super().__str__()
        if self.degree is not None and self.bound is not None:
            return f"{base_msg} (degree {self.degree} > {self.bound})"
        return base_msg


class GrammarException(MultiEulerException):
    """Raised when a grammar is unknown or cannot act on a formal polynomial."""

    def __init__(self, message: str, letter: Optional[str] = None,
                 grammar: Optional[str] = None, **kwargs):
        self.letter = letter
        self.grammar = grammar
        super().__init__(message, **kwargs)


class ExtractionException(GrammarException):
    """Raised when a formal polynomial does not reduce to an integral univariate one."""

    def __init__(self, message: str, reason: Optional[str] = None, **kwargs):
        self.reason = reason
        super().__init__(message, **kwargs)


class EnumerationCapException(MultiEulerException):
    """Raised when a brute-force enumeration would exceed its configured cap."""

    def __init__(self, message: str, family: Optional[str] = None,
                 n: Optional[int] = None, cap: Optional[int] = None, **kwargs):
        self.family = family
        self.n = n
        self.cap = cap
        super().__init__(message, **kwargs)

    def __str__(self) -> str:
        base_msg = super().__str__()
        if self.n is not None and self.cap is not None:
            return f"{base_msg} (n={self.n}, cap={self.cap})"
        return base_msg


class IntegralityException(MultiEulerException):
    """Raised when a coefficient expected to be an integer is not."""

    def __init__(self, message: str, family: Optional[str] = None,
                 n: Optional[int] = None, **kwargs):
        self.family = family
        self.n = n
        super().__init__(message, **kwargs)


class NegativeEntryException(MultiEulerException):
    """Raised when a gamma table acquires a negative entry."""

    def __init__(self, message: str, table: Optional[str] = None,
                 n: Optional[int] = None, k: Optional[int] = None, **kwargs):
        self.table = table
        self.n = n
        self.k = k
        super().__init__(message, **kwargs)

    def __str__(self) -> str:
        base_msg = super().__str__()
        if self.table is not None:
            return f"{base_msg} ({self.table}[{self.n}][{self.k}])"
        return base_msg


class AnalysisException(MultiEulerException):
    """Raised when a structural analysis precondition fails."""
    pass


class InterlacingException(AnalysisException):
    """Raised when two polynomials cannot be compared for strict interlacing."""

    def __init__(self, message: str, reason: Optional[str] = None, **kwargs):
        self.reason = reason
        super().__init__(message, **kwargs)
