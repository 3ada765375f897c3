"""Truncated power series checks of the rational generating functions."""

from __future__ import annotations

import itertools
import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

from . import config
from .enumeration import multiset_descent_poly
from .exceptions import ValidationException
from .model.poly import UniPoly
from .model.series import TruncSeries
from .recurrences import pnk_rows, qnk_via_r

logger = logging.getLogger(__name__)


def _check_order(order: int) -> None:
    if order < 0:
        raise ValidationException(f"Series order must be nonnegative, got {order}")


def expand_over_one_minus_x_pow(f: UniPoly, m: int, order: int) -> TruncSeries:
    """First ``order + 1`` coefficients of f(x) / (1-x)^m, by m prefix-sum passes."""
    _check_order(order)
    if m < 1:
        raise ValidationException(f"Denominator power must be positive, got {m}")
    coeffs = [f[t] for t in range(order + 1)]
    for _ in range(m):
        coeffs = list(itertools.accumulate(coeffs))
    return TruncSeries(order, tuple(coeffs))


def inverse_power_series(m: int, order: int) -> TruncSeries:
    """(1-x)^(-m) = sum_t C(t+m-1, m-1) x^t."""
    _check_order(order)
    if m < 1:
        raise ValidationException(f"Denominator power must be positive, got {m}")
    coeffs = (Fraction(math.comb(t + m - 1, m - 1)) for t in range(order + 1))
    return TruncSeries(order, tuple(coeffs))


def _agrees(series: TruncSeries, target, label: str) -> bool:
    for t in range(series.order + 1):
        expected = target(t)
        if series[t] != expected:
            logger.warning(f"{label}: coefficient {t} is {series[t]}, expected {expected}")
            return False
    return True


def check_p_identity(
    n: int, order: int = config.SERIES_ORDER, poly: Optional[UniPoly] = None
) -> bool:
    """sum_t C(t+2, 2)^n x^t = P_n(x) / (1-x)^(2n+1) up to ``order``.

    ``poly`` replaces P_n as the numerator when given.
    """
    if n < 1:
        raise ValidationException(f"n must be positive, got {n}")
    numerator = pnk_rows(n).poly(n) if poly is None else poly
    series = expand_over_one_minus_x_pow(numerator, 2 * n + 1, order)
    return _agrees(series, lambda t: Fraction(math.comb(t + 2, 2) ** n), f"P identity n={n}")


def check_q_identity(
    n: int, order: int = config.SERIES_ORDER, poly: Optional[UniPoly] = None
) -> bool:
    """sum_t (t+1)^(n+1) ((t+2)/2)^n x^t = Q_n(x) / (1-x)^(2n+2) up to ``order``."""
    if n < 1:
        raise ValidationException(f"n must be positive, got {n}")
    numerator = qnk_via_r(n)[1].poly(n) if poly is None else poly
    series = expand_over_one_minus_x_pow(numerator, 2 * n + 2, order)
    return _agrees(
        series,
        lambda t: Fraction(t + 1) ** (n + 1) * Fraction(t + 2, 2) ** n,
        f"Q identity n={n}",
    )


def check_macmahon(multiplicities: Sequence[int], order: int = config.SERIES_ORDER) -> bool:
    """sum_t prod_i C(t+p_i, p_i) x^t = W(x) / (1-x)^(1+sum p_i).

    W is the multiset descent polynomial.
    """
    p = tuple(multiplicities)
    w = multiset_descent_poly(p)
    series = expand_over_one_minus_x_pow(w, 1 + sum(p), order)
    return _agrees(
        series,
        lambda t: Fraction(math.prod(math.comb(t + pi, pi) for pi in p)),
        f"MacMahon {p}",
    )
