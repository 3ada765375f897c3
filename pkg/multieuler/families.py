"""The four family polynomials P_n, Q_n, S_n, T_n by any of the five methods."""

from __future__ import annotations

import logging
from typing import Tuple

from . import config
from .enumeration import distribution, inv_seq_eulerian, s_sequence
from .exceptions import IntegralityException, ValidationException
from .grammar import builtin_grammar, extract_univariate, iterate_pair
from .model.formal import FormalPoly, Monomial
from .model.poly import UniPoly
from .recurrences import assemble_from_gamma, diff_system, pnk_rows, qnk_via_r, snk_rows, tnk_rows

logger = logging.getLogger(__name__)

# (first grammar, second grammar, trailing, divisor letter, collected letter, letter set to 1)
_GRAMMAR_RECIPES = {
    "P": ("G3", "G4", None, "x", "x", "y"),
    "Q": ("G3", "G4", "a", "w", "x", "y"),
    "S": ("G5", "G6", None, "y", "y", "x"),
    "T": ("G5", "G6", "a", "w", "y", "x"),
}


def check_family(family: str) -> None:
    if family not in config.AVAILABLE_FAMILIES:
        raise ValidationException(
            f"Unknown family {family!r}. Available: {', '.join(config.AVAILABLE_FAMILIES)}"
        )


def check_method(method: str) -> None:
    if method not in config.AVAILABLE_METHODS:
        raise ValidationException(
            f"Unknown method {method!r}. Available: {', '.join(config.AVAILABLE_METHODS)}"
        )


def family_center(family: str, n: int) -> int:
    """Declared degree used for symmetry and decomposition: 2n-2, 2n-1, 2n-1, 2n."""
    check_family(family)
    return {"P": 2 * n - 2, "Q": 2 * n - 1, "S": 2 * n - 1, "T": 2 * n}[family]


def grammar_formal(family: str, n: int) -> FormalPoly:
    """The grammar iterate whose coefficients give the family polynomial."""
    check_family(family)
    first, second, trailing, *_ = _GRAMMAR_RECIPES[family]
    return iterate_pair(builtin_grammar(first), builtin_grammar(second), n, trailing)


def _via_grammar(family: str, n: int) -> UniPoly:
    _, _, _, divisor, collect, one = _GRAMMAR_RECIPES[family]
    return extract_univariate(
        grammar_formal(family, n), Monomial.of(1, **{divisor: 1}), collect=collect, set_one={one}
    )


def family_polynomial(family: str, n: int, method: str, *, cap_override: bool = False) -> UniPoly:
    """Build a family polynomial with one method; the result is checked to be integral."""
    check_family(family)
    check_method(method)
    if not isinstance(n, int) or n < 1:
        raise ValidationException(f"n must be a positive integer, got {n!r}")
    logger.debug(f"building {family}_{n} by {method}")
    if method == "enum":
        stat = "des" if family in ("P", "Q") else "des_B"
        poly = distribution(config.WORD_FAMILY[family], n, stat, cap_override=cap_override)
    elif method == "rec":
        if family == "P":
            poly = pnk_rows(n).poly(n)
        elif family == "Q":
            poly = qnk_via_r(n)[1].poly(n)
        elif family == "S":
            poly = snk_rows(n).poly(n)
        else:
            poly = tnk_rows(n).poly(n)
    elif method == "diffsys":
        poly = getattr(diff_system(n), family)[n]
    elif method == "grammar":
        poly = _via_grammar(family, n)
    else:
        poly = inv_seq_eulerian(s_sequence(family, n), cap_override=cap_override)
    if not poly.is_integral():
        raise IntegralityException(
            "non-integral coefficient", family=family, n=n, detail=str(poly)
        )
    return poly


def family_decomposition_parts(family: str, n: int) -> Tuple[UniPoly, UniPoly]:
    """The (a, b) symmetric parts predicted by the gamma tables."""
    check_family(family)
    if family == "P":
        return assemble_from_gamma("P", n), UniPoly.zero()
    if family == "Q":
        return assemble_from_gamma("R", n), assemble_from_gamma("P", n)
    if family == "S":
        return assemble_from_gamma("Splus", n), assemble_from_gamma("Sminus", n)
    return assemble_from_gamma("Tplus", n), assemble_from_gamma("Tminus", n)
