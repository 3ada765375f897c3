"""Structure of polynomials: symmetric decomposition, gamma vectors, modes and real roots.

Root counting uses Sturm sequences over the integers. A polynomial with
rational coefficients is scaled to an integral one, split into square-free
factors with sympy, and each factor gets a pseudo-remainder chain whose
elements are divided by their content. Chain signs are evaluated at rational
points without leaving the integers.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from sympy import ZZ, Poly, Symbol

from .exceptions import AnalysisException, InterlacingException
from .model.poly import UniPoly, binomial_row, poly_div_one_minus_x, poly_reverse
from .model.structure import (
    GammaVector,
    PositivityReport,
    RootCertificate,
    RootInterval,
    RootIsolation,
    SymmetricDecomposition,
)

logger = logging.getLogger(__name__)

_X = Symbol("x")


def symmetric_decompose(f: UniPoly, n: int) -> SymmetricDecomposition:
    """Unique f = a + x*b with a = x^n a(1/x) and b = x^(n-1) b(1/x).

    a = (f - x^(n+1) f(1/x)) / (1-x) and b = (x^n f(1/x) - f) / (1-x).
    """
    if n < 0:
        raise AnalysisException(f"Decomposition center must be nonnegative, got {n}")
    a = poly_div_one_minus_x(f - poly_reverse(f, n + 1))
    b = poly_div_one_minus_x(poly_reverse(f, n) - f)
    return SymmetricDecomposition(a=a, b=b, center=n)


def gamma_vector(f: UniPoly, n: int) -> GammaVector:
    """Coordinates of a symmetric f in the basis x^k (1+x)^(n-2k), peeled from low degree."""
    if poly_reverse(f, n) != f:
        raise AnalysisException("not symmetric", detail=f"{f} about center {n}")
    residual = f.int_coeffs() if f.is_integral() else list(f.coeffs)
    residual += [0] * (n + 1 - len(residual))
    gammas = []
    for k in range(n // 2 + 1):
        g = residual[k]
        gammas.append(Fraction(g))
        if g != 0:
            for j, c in enumerate(binomial_row(n - 2 * k)):
                residual[k + j] -= g * c
    if any(residual):
        logger.error(f"gamma peeling left residual {residual}")
        raise AnalysisException("nonzero residual", detail=str(residual))
    return GammaVector(center=n, gammas=tuple(gammas))


def _alternating_order(n: int) -> List[int]:
    order = []
    i, j = 0, n
    while i <= j:
        order.append(i)
        if i != j:
            order.append(j)
        i += 1
        j -= 1
    return order


def is_alternatingly_increasing(f: UniPoly, n: int) -> bool:
    """f_0 <= f_n <= f_1 <= f_(n-1) <= ..."""
    values = [f[i] for i in _alternating_order(n)]
    return all(u <= v for u, v in zip(values, values[1:]))


def is_unimodal(coeffs: Sequence[Fraction]) -> bool:
    i = 0
    while i + 1 < len(coeffs) and coeffs[i] <= coeffs[i + 1]:
        i += 1
    while i + 1 < len(coeffs) and coeffs[i] >= coeffs[i + 1]:
        i += 1
    return i + 1 >= len(coeffs)


def mode_set(coeffs: Sequence[Fraction]) -> List[int]:
    if not coeffs:
        return []
    top = max(coeffs)
    return [k for k, c in enumerate(coeffs) if c == top]


def positivity_report(f: UniPoly, n: int) -> PositivityReport:
    """Gamma, bi-gamma, alternating-increase and unimodality facts about f with center n."""
    if any(c < 0 for c in f.coeffs):
        raise AnalysisException("negative input coefficient", detail=str(f))
    symmetric = poly_reverse(f, n) == f
    gamma = gamma_vector(f, n) if symmetric else None
    parts = symmetric_decompose(f, n)
    gamma_a = gamma_vector(parts.a, n)
    gamma_b = gamma_vector(parts.b, n - 1)
    return PositivityReport(
        center=n,
        symmetric=symmetric,
        gamma_positive=None if gamma is None else gamma.is_nonnegative,
        bi_gamma_positive=gamma_a.is_nonnegative and gamma_b.is_nonnegative,
        alternatingly_increasing=is_alternatingly_increasing(f, n),
        unimodal=is_unimodal(f.coeffs),
        mode_set=mode_set(f.coeffs),
        gamma=gamma,
        gamma_a=gamma_a,
        gamma_b=gamma_b,
    )


# -- exact real roots -------------------------------------------------------

def to_sympy(f: UniPoly) -> Poly:
    """Integral sympy polynomial, a positive multiple of f."""
    scale = math.lcm(*(c.denominator for c in f.coeffs)) if f.coeffs else 1
    ints = [int(c * scale) for c in f.coeffs]
    return Poly(list(reversed(ints)), _X, domain=ZZ)


def _primitive(p: Poly) -> Poly:
    content = 0
    for c in p.all_coeffs():
        content = math.gcd(content, int(c))
    return p.exquo_ground(content) if content > 1 else p


@dataclass(frozen=True)
class _Sturm:
    """Sturm chain of a square-free integral polynomial, highest coefficient first."""

    chain: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, g: Poly) -> "_Sturm":
        seq = [_primitive(g), _primitive(g.diff(_X))]
        while seq[-1].degree() > 0:
            prev, cur = seq[-2], seq[-1]
            delta = prev.degree() - cur.degree()
            prem = prev.prem(cur)
            if prem.is_zero:
                break
            # prem = lc^(delta+1) * rem, and the chain continues with -rem
            if int(cur.LC()) ** (delta + 1) > 0:
                prem = -prem
            seq.append(_primitive(prem))
        return cls(tuple(tuple(int(c) for c in p.all_coeffs()) for p in seq))

    @property
    def poly(self) -> Tuple[int, ...]:
        return self.chain[0]

    def variations(self, x: Fraction) -> int:
        signs = [s for s in (_sign_at(p, x) for p in self.chain) if s != 0]
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct real roots in (lo, hi]."""
        return self.variations(lo) - self.variations(hi)


def _sign_at(coeffs: Tuple[int, ...], x: Fraction) -> int:
    # q^d * p(num/den) keeps the sign since den > 0
    num, den = x.numerator, x.denominator
    acc = coeffs[0]
    den_power = 1
    for a in coeffs[1:]:
        den_power *= den
        acc = acc * num + a * den_power
    return (acc > 0) - (acc < 0)


def cauchy_bound(coeffs: Sequence[int]) -> Fraction:
    """1 + max |a_i| / |a_d| for coefficients given highest first."""
    lead = abs(coeffs[0])
    return 1 + Fraction(max((abs(c) for c in coeffs[1:]), default=0), lead)


def _log2_floor(x: Fraction) -> int:
    e = x.numerator.bit_length() - x.denominator.bit_length()
    return e if Fraction(2) ** e <= x else e - 1


def _split_positive(a: Fraction, b: Fraction) -> Fraction:
    if a == 0:
        return Fraction(1) if b > 1 else b / 16
    if b > 4 * a:
        s = Fraction(2) ** ((_log2_floor(a) + _log2_floor(b) + 1) // 2)
        if a < s < b:
            return s
    return (a + b) / 2


def _split(lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi), geometric on long one-signed intervals."""
    if lo < 0 < hi:
        return Fraction(0)
    if lo >= 0:
        return _split_positive(lo, hi)
    return -_split_positive(-hi, -lo)


def _split_points(lo: Fraction, hi: Fraction) -> Iterator[Fraction]:
    """Candidates strictly inside (lo, hi), spreading out from the middle."""
    yield _split(lo, hi)
    mid = (lo + hi) / 2
    yield mid
    step = (hi - lo) / 4
    while True:
        yield mid + step
        yield mid - step
        step /= 2


def _safe_split(sturm: _Sturm, lo: Fraction, hi: Fraction) -> Fraction:
    """A split point of (lo, hi) that is not itself a root.

    Endpoints stay non-roots, so Sturm counts on (lo, hi] equal counts on the
    open interval.
    """
    return next(s for s in _split_points(lo, hi) if _sign_at(sturm.poly, s) != 0)


def _isolate(sturm: _Sturm, bound: Fraction) -> List[Tuple[Fraction, Fraction]]:
    pending = [(-bound, bound, sturm.count(-bound, bound))]
    found = []
    while pending:
        lo, hi, c = pending.pop()
        if c == 0:
            continue
        if c == 1:
            found.append((lo, hi))
            continue
        mid = _safe_split(sturm, lo, hi)
        left = sturm.count(lo, mid)
        pending.append((mid, hi, c - left))
        pending.append((lo, mid, left))
    return sorted(found)


def _shrink(sturm: _Sturm, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    mid = _safe_split(sturm, lo, hi)
    return (lo, mid) if sturm.count(lo, mid) == 1 else (mid, hi)


def _separate(items: List[list]) -> List[list]:
    """Refine ``[lo, hi, sturm, tag]`` items until the open intervals are disjoint."""
    while True:
        items.sort(key=lambda it: (it[0], it[1]))
        clash = next(
            (i for i in range(len(items) - 1) if items[i][1] > items[i + 1][0]), None
        )
        if clash is None:
            return items
        for it in (items[clash], items[clash + 1]):
            it[0], it[1] = _shrink(it[2], it[0], it[1])


@dataclass(frozen=True)
class _Factors:
    poly: Poly
    degree: int
    parts: Tuple[Tuple[_Sturm, int], ...]


def _factors(f: UniPoly) -> _Factors:
    p = to_sympy(f)
    _, factors = p.sqf_list()
    parts = tuple(
        (_Sturm.of(g), mult) for g, mult in factors if g.degree() > 0
    )
    return _Factors(poly=p, degree=p.degree(), parts=parts)


def real_root_certificate(f: UniPoly) -> RootCertificate:
    """Count and isolate the real roots of f exactly.

    f is real-rooted when the real roots, counted with multiplicity, number
    deg f. Every returned interval holds exactly one root and no two overlap.
    """
    if f.is_zero:
        raise AnalysisException("Real-root certificate needs a nonzero polynomial")
    info = _factors(f)
    bound = cauchy_bound([int(c) for c in info.poly.all_coeffs()])
    items = []
    for sturm, mult in info.parts:
        for lo, hi in _isolate(sturm, bound):
            items.append([lo, hi, sturm, mult])
    items = _separate(items)
    isolation = RootIsolation(tuple(RootInterval(lo, hi, mult) for lo, hi, _, mult in items))
    logger.debug(
        f"degree {info.degree}: {isolation.root_count} real roots in (-{bound}, {bound}]"
    )
    return RootCertificate(
        is_real_rooted=isolation.root_count == info.degree,
        isolation=isolation,
        degree=info.degree,
        bound=bound,
    )


def _has_multiple_root(p: Poly) -> bool:
    return p.gcd(p.diff(_X)).degree() > 0


def strictly_interlaces(p: UniPoly, q: UniPoly) -> bool:
    """True when the roots of q and p alternate as q, p, q, ..., p, q."""
    if q.degree != p.degree + 1:
        raise InterlacingException(
            "degree mismatch", reason="degree mismatch",
            detail=f"deg p = {p.degree}, deg q = {q.degree}",
        )
    if p.degree == 0:
        return True
    sp, sq = to_sympy(p), to_sympy(q)
    if sp.gcd(sq).degree() > 0:
        raise InterlacingException("common root", reason="common root")
    if _has_multiple_root(sp) or _has_multiple_root(sq):
        raise InterlacingException("multiple root", reason="multiple root")
    items = []
    for tag, poly, sym in (("p", p, sp), ("q", q, sq)):
        sturm = _Sturm.of(sym)
        bound = cauchy_bound(sturm.poly)
        intervals = _isolate(sturm, bound)
        if len(intervals) != poly.degree:
            raise InterlacingException("not real-rooted", reason="not real-rooted", detail=tag)
        items.extend([lo, hi, sturm, tag] for lo, hi in intervals)
    order = "".join(it[3] for it in _separate(items))
    expected = "q" + "pq" * p.degree
    logger.debug(f"interlacing pattern {order}")
    return order == expected
