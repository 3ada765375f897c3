"""Dense univariate polynomials over exact rationals.

Coefficients are :class:`fractions.Fraction` values (always reduced, with a
positive denominator), stored lowest degree first with no trailing zeros.
The empty tuple is the zero polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

from ..exceptions import (
    DegreeBoundException,
    IntegralityException,
    NotDivisibleException,
    ValidationException,
)

Scalar = Union[int, Fraction]

ARITH_OPS = ("add", "sub", "mul", "scale")


def _strip(coeffs: Iterable[Scalar]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class UniPoly:
    coeffs: Tuple[Fraction, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def of(cls, *coeffs: Scalar) -> "UniPoly":
        """Build from coefficients given lowest degree first: ``UniPoly.of(1, 4, 1)``."""
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> "UniPoly":
        return cls((Fraction(c),))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "UniPoly":
        return cls(tuple([Fraction(0)] * k + [Fraction(c)]))

    @classmethod
    def one_plus_x_power(cls, m: int) -> "UniPoly":
        return from_ints(binomial_row(m))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        other = _coerce(other)
        size = max(len(self), len(other))
        return UniPoly(tuple(self[k] + other[k] for k in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "UniPoly":
        return _coerce(other) - self

    def __mul__(self, other: Union["UniPoly", Scalar]) -> "UniPoly":
        if not isinstance(other, UniPoly):
            c = Fraction(other)
            return UniPoly(tuple(c * a for a in self.coeffs))
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return UniPoly(tuple([Fraction(0)] * k) + self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> List[int]:
        """Coefficients as Python ints; raises if any coefficient is not integral."""
        if not self.is_integral():
            raise IntegralityException(
                "Polynomial has a non-integral coefficient", detail=str(self)
            )
        return [int(c) for c in self.coeffs]

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            else:
                head = "" if c == 1 else f"{c}"
                parts.append(f"{head}x" if k == 1 else f"{head}x^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(value: Union[UniPoly, Scalar]) -> UniPoly:
    if isinstance(value, UniPoly):
        return value
    return UniPoly.constant(value)


@lru_cache(maxsize=None)
def binomial_row(m: int) -> Tuple[int, ...]:
    """Coefficients of (1+x)**m as ints."""
    if m < 0:
        raise ValidationException(f"Power of (1+x) must be nonnegative, got {m}")
    return tuple(math.comb(m, k) for k in range(m + 1))


def from_ints(values: Sequence[int]) -> UniPoly:
    return UniPoly(tuple(Fraction(v) for v in values))


def poly_arith(op: str, f: UniPoly, g: Union[UniPoly, Scalar]) -> UniPoly:
    """Exact ``add``, ``sub``, ``mul`` or ``scale``; the result is normalized."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        if isinstance(g, UniPoly):
            raise ValidationException("scale takes a rational factor, not a polynomial")
        return f * Fraction(g)
    raise ValidationException(
        f"Unknown polynomial operation {op!r}. Available: {', '.join(ARITH_OPS)}"
    )


def poly_derivative(f: UniPoly) -> UniPoly:
    return UniPoly(tuple(k * c for k, c in enumerate(f.coeffs) if k > 0))


def poly_reverse(f: UniPoly, n: int) -> UniPoly:
    """Return x**n * f(1/x); coefficient k of the result is coefficient n-k of f."""
    if f.degree > n:
        raise DegreeBoundException(
            "Cannot reverse relative to a smaller degree", degree=f.degree, bound=n
        )
    if f.is_zero:
        return f
    return UniPoly(tuple(f[n - k] for k in range(n + 1)))


def poly_div_one_minus_x(f: UniPoly) -> UniPoly:
    """Exact quotient g with g * (1 - x) = f."""
    if f(1) != 0:
        raise NotDivisibleException(
            "not divisible", degree=f.degree, detail=f"f(1) = {f(1)}"
        )
    # f = (1 - x) g  =>  g_k = f_0 + ... + f_k
    out = []
    acc = Fraction(0)
    for c in f.coeffs[:-1]:
        acc += c
        out.append(acc)
    return UniPoly(tuple(out))
