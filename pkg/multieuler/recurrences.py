"""Coefficient recurrences, the polynomial differential system and gamma tables.

Every table reads out-of-range indices as 0, so the recurrences below are
written without boundary cases. Builders are cached: tables are immutable.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, List, Sequence, Tuple, Union

from .exceptions import IntegralityException, PolynomialException, ValidationException
from .model.poly import UniPoly, binomial_row, from_ints, poly_derivative
from .model.table import GammaTable, TriTable

logger = logging.getLogger(__name__)

ASSEMBLY_KINDS = ("P", "R", "Q", "Splus", "Sminus", "S", "Tplus", "Tminus", "T")

X_ONE_MINUS_X = UniPoly.of(0, 1, -1)


def _at(row: Sequence[int], k: int) -> int:
    return row[k] if 0 <= k < len(row) else 0


def _check_max(n_max: int, least: int = 1) -> None:
    if not isinstance(n_max, int) or n_max < least:
        raise ValidationException(f"Table depth must be an integer >= {least}, got {n_max!r}")


@lru_cache(maxsize=None)
def pnk_rows(n_max: int) -> TriTable:
    """P_{n,k} for n = 1..n_max, starting from P_1 = 1."""
    _check_max(n_max)
    rows: List[Tuple[int, ...]] = [(1,)]
    for n in range(1, n_max):
        prev = rows[-1]
        rows.append(tuple(
            comb(k + 2, 2) * _at(prev, k)
            + (k + 1) * (2 * n - k + 1) * _at(prev, k - 1)
            + comb(2 * n - k + 2, 2) * _at(prev, k - 2)
            for k in range(2 * n + 1)
        ))
        logger.debug(f"P row {n + 1}: {len(rows[-1])} entries")
    return TriTable("P", tuple(rows))


@lru_cache(maxsize=None)
def qnk_via_r(n_max: int) -> Tuple[TriTable, TriTable]:
    """R_{n,k} = (k+1)P_{n,k} + (2n-k)P_{n,k-1} and Q_{n,k} = R_{n,k} + P_{n,k-1}."""
    p_table = pnk_rows(n_max)
    r_rows, q_rows = [], []
    for n in range(1, n_max + 1):
        p = p_table.row(n)
        r = tuple((k + 1) * _at(p, k) + (2 * n - k) * _at(p, k - 1) for k in range(2 * n))
        r_rows.append(r)
        q_rows.append(tuple(r[k] + _at(p, k - 1) for k in range(2 * n)))
    return TriTable("R", tuple(r_rows)), TriTable("Q", tuple(q_rows))


@lru_cache(maxsize=None)
def snk_rows(n_max: int) -> TriTable:
    """S_{n,i} for n = 1..n_max, starting from S_1 = 1 + 3x."""
    _check_max(n_max)
    rows: List[Tuple[int, ...]] = [(1, 3)]
    for n in range(1, n_max):
        prev = rows[-1]
        rows.append(tuple(
            comb(2 * i + 2, 2) * _at(prev, i)
            + (2 * i * (4 * n - 2 * i + 3) + 2 * n + 1) * _at(prev, i - 1)
            + comb(4 * n - 2 * i + 5, 2) * _at(prev, i - 2)
            for i in range(2 * n + 2)
        ))
        logger.debug(f"S row {n + 1}: {len(rows[-1])} entries")
    return TriTable("S", tuple(rows))


def tnk_from_s(s_table: TriTable) -> TriTable:
    """T_{n,k} = (k+1)S_{n,k} + (2n-k+1)S_{n,k-1}."""
    if s_table.family != "S":
        raise ValidationException(f"tnk_from_s needs an S table, got {s_table.family}")
    rows = []
    for n in range(1, s_table.n_max + 1):
        s = s_table.row(n)
        rows.append(tuple(
            (k + 1) * _at(s, k) + (2 * n - k + 1) * _at(s, k - 1) for k in range(2 * n + 1)
        ))
    return TriTable("T", tuple(rows))


@lru_cache(maxsize=None)
def tnk_rows(n_max: int) -> TriTable:
    return tnk_from_s(snk_rows(n_max))


@dataclass(frozen=True)
class PolySystem:
    """Solutions of the differential system; index i holds the polynomial for n = i."""

    P: Tuple[UniPoly, ...]
    Q: Tuple[UniPoly, ...]
    S: Tuple[UniPoly, ...]
    T: Tuple[UniPoly, ...]


def _integral(f: UniPoly, family: str, n: int) -> UniPoly:
    if not f.is_integral():
        logger.error(f"diff_system produced a non-integral {family}_{n}: {f}")
        raise IntegralityException(
            "non-integral coefficient", family=family, n=n, detail=str(f)
        )
    return f


@lru_cache(maxsize=None)
def diff_system(n_max: int) -> PolySystem:
    """Run the differential system from P_0 = Q_0 = S_0 = T_0 = 1.

    Returns P_0..P_{n_max+1}, Q_0..Q_{n_max}, S_0..S_{n_max+1} and
    T_0..T_{n_max}, all checked to be integral.
    """
    _check_max(n_max, least=0)
    half = Fraction(1, 2)
    P, Q, S, T = [UniPoly.constant(1)], [], [UniPoly.constant(1)], []
    for n in range(n_max + 1):
        p, s = P[n], S[n]
        q = UniPoly.of(1, 2 * n) * p + X_ONE_MINUS_X * poly_derivative(p)
        Q.append(_integral(q, "Q", n))
        P.append(_integral(
            UniPoly.of(1, n) * q + X_ONE_MINUS_X * poly_derivative(q) * half, "P", n + 1
        ))
        t = UniPoly.of(1, 2 * n) * s + X_ONE_MINUS_X * poly_derivative(s)
        T.append(_integral(t, "T", n))
        S.append(_integral(
            UniPoly.of(1, 3 + 4 * n) * t + X_ONE_MINUS_X * poly_derivative(t) * 2, "S", n + 1
        ))
    return PolySystem(tuple(P), tuple(Q), tuple(S), tuple(T))


def r_poly_diff(n: int) -> UniPoly:
    """R_n = (1 + (2n-1)x)P_n + x(1-x)P_n', built from the P recurrence."""
    _check_max(n)
    p = pnk_rows(n).poly(n)
    return UniPoly.of(1, 2 * n - 1) * p + X_ONE_MINUS_X * poly_derivative(p)


def _nonnegative(kind: str, index: int, row: Tuple[int, ...]) -> Tuple[int, ...]:
    for k, value in enumerate(row):
        if value < 0:
            logger.error(f"negative gamma entry {kind}[{index}][{k}] = {value}")
    # GammaTable raises NegativeEntryException on construction
    return row


@lru_cache(maxsize=None)
def gamma_p_rows(n_max: int) -> GammaTable:
    """Gamma coefficients p_{n,k} of P_n, k = 0..n-1."""
    _check_max(n_max)
    rows: List[Tuple[int, ...]] = [(1,)]
    for n in range(1, n_max):
        prev = rows[-1]
        row = tuple(
            comb(k + 2, 2) * _at(prev, k)
            + (k + 1) * (4 * n - 4 * k + 1) * _at(prev, k - 1)
            + 4 * comb(2 * n - 2 * k + 2, 2) * _at(prev, k - 2)
            for k in range(n + 1)
        )
        rows.append(_nonnegative("p", n + 1, row))
    return GammaTable("p", tuple(rows))


def gamma_r_from_p(p_table: GammaTable) -> GammaTable:
    """r_{n,k} = (k+1)p_{n,k} + 4(n-k)p_{n,k-1}."""
    if p_table.kind != "p":
        raise ValidationException(f"gamma_r_from_p needs a p table, got {p_table.kind}")
    rows = []
    for n in range(p_table.first, p_table.last + 1):
        p = p_table.row(n)
        row = tuple((k + 1) * _at(p, k) + 4 * (n - k) * _at(p, k - 1) for k in range(n))
        rows.append(_nonnegative("r", n, row))
    return GammaTable("r", tuple(rows))


@lru_cache(maxsize=None)
def gamma_r_rows(n_max: int) -> GammaTable:
    return gamma_r_from_p(gamma_p_rows(n_max))


def _eta_width(m: int) -> int:
    return (m - 1) // 2 + 1


@lru_cache(maxsize=None)
def eta_rows(m_max: int) -> Tuple[GammaTable, GammaTable]:
    """The eta+/eta- tables for combined indices m = 1..m_max.

    Even m = 2n carries S_n, odd m = 2n+1 carries T_n. Rows alternate an odd
    step (2m -> 2m+1) and an even step (2m+1 -> 2m+2).
    """
    _check_max(m_max, least=2)
    plus: List[Tuple[int, ...]] = [(1,), (1,)]
    minus: List[Tuple[int, ...]] = [(0,), (2,)]
    while len(plus) < m_max:
        index = len(plus) + 1
        ep, em = plus[-1], minus[-1]
        width = _eta_width(index)
        if index % 2 == 1:
            m = (index - 1) // 2
            new_plus = tuple(
                (1 + k) * _at(ep, k)
                + 2 * (2 * m - 2 * k + 1) * _at(ep, k - 1)
                + _at(em, k - 1)
                for k in range(width)
            )
            new_minus = tuple(
                (1 + k) * _at(em, k) + 4 * (m - k) * _at(em, k - 1) for k in range(width)
            )
        else:
            m = (index - 2) // 2
            new_plus = tuple(
                (1 + 2 * k) * _at(ep, k) + 8 * (m - k + 1) * _at(ep, k - 1)
                for k in range(width)
            )
            new_minus = tuple(
                (3 + 2 * k) * _at(em, k)
                + 4 * (2 * m - 2 * k + 1) * _at(em, k - 1)
                + 2 * _at(ep, k)
                for k in range(width)
            )
        plus.append(_nonnegative("eta_plus", index, new_plus))
        minus.append(_nonnegative("eta_minus", index, new_minus))
    logger.debug(f"eta rows built up to m={m_max}")
    return (
        GammaTable("eta_plus", tuple(plus[:m_max])),
        GammaTable("eta_minus", tuple(minus[:m_max])),
    )


def expand_gamma(row: Sequence[int], center: int) -> UniPoly:
    """Sum of row[k] x^k (1+x)^(center-2k); zero entries are skipped."""
    out = [0] * (center + 1) if center >= 0 else []
    for k, value in enumerate(row):
        if value == 0:
            continue
        power = center - 2 * k
        if power < 0:
            raise PolynomialException(
                "gamma entry beyond the center", degree=center, detail=f"k={k}, value={value}"
            )
        for j, c in enumerate(binomial_row(power)):
            out[k + j] += value * c
    return from_ints(out)


def assemble_from_gamma(kind: str, n: int) -> UniPoly:
    """Rebuild a family polynomial, or one part of it, from its gamma table."""
    _check_max(n)
    if kind == "P":
        return expand_gamma(gamma_p_rows(n).row(n), 2 * n - 2)
    if kind == "R":
        return expand_gamma(gamma_r_rows(n).row(n), 2 * n - 1)
    if kind == "Q":
        return assemble_from_gamma("R", n) + assemble_from_gamma("P", n).shift(1)
    if kind in ("Splus", "Sminus", "S"):
        plus, minus = eta_rows(2 * n)
        if kind == "Splus":
            return expand_gamma(plus.row(2 * n), 2 * n - 1)
        if kind == "Sminus":
            return expand_gamma(minus.row(2 * n), 2 * n - 2)
        return assemble_from_gamma("Splus", n) + assemble_from_gamma("Sminus", n).shift(1)
    if kind in ("Tplus", "Tminus", "T"):
        plus, minus = eta_rows(2 * n + 1)
        if kind == "Tplus":
            return expand_gamma(plus.row(2 * n + 1), 2 * n)
        if kind == "Tminus":
            return expand_gamma(minus.row(2 * n + 1), 2 * n - 1)
        return assemble_from_gamma("Tplus", n) + assemble_from_gamma("Tminus", n).shift(1)
    raise ValidationException(
        f"Unknown assembly kind {kind!r}. Available: {', '.join(ASSEMBLY_KINDS)}"
    )


def build_table(name: str, max_n: int) -> Union[TriTable, GammaTable]:
    """Table by export name; eta tables run to m = 2*max_n + 1 so they cover T_max_n."""
    if name == "P":
        return pnk_rows(max_n)
    if name == "R":
        return qnk_via_r(max_n)[0]
    if name == "Q":
        return qnk_via_r(max_n)[1]
    if name == "S":
        return snk_rows(max_n)
    if name == "T":
        return tnk_rows(max_n)
    if name == "p":
        return gamma_p_rows(max_n)
    if name == "r":
        return gamma_r_rows(max_n)
    if name in ("eta_plus", "eta_minus"):
        _check_max(max_n)
        plus, minus = eta_rows(2 * max_n + 1)
        return plus if name == "eta_plus" else minus
    raise ValidationException(f"Unknown table {name!r}")


def table_csv_rows(table: Union[TriTable, GammaTable]) -> Iterator[Tuple[str, int, int, int]]:
    """``family,n,k,value`` rows for CSV export."""
    return table.csv_rows()
