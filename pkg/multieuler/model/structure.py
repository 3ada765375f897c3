from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .poly import UniPoly


def _fmt(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SymmetricDecomposition:
    """f = a + x*b with a symmetric about n/2 and b about (n-1)/2."""

    a: UniPoly
    b: UniPoly
    center: int


@dataclass(frozen=True)
class GammaVector:
    center: int
    gammas: Tuple[Fraction, ...]

    @property
    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gammas)

    def reassemble(self) -> UniPoly:
        """Sum of gamma_k x^k (1+x)^(n-2k)."""
        total = UniPoly.zero()
        for k, g in enumerate(self.gammas):
            if g != 0:
                total = total + UniPoly.one_plus_x_power(self.center - 2 * k).shift(k) * g
        return total


@dataclass(frozen=True)
class RootInterval:
    """Open interval (lo, hi) holding exactly one real root of the given multiplicity."""

    lo: Fraction
    hi: Fraction
    mult: int = 1

    def to_dict(self) -> Dict[str, Any]:
        return {"lo": _fmt(self.lo), "hi": _fmt(self.hi), "mult": self.mult}


@dataclass(frozen=True)
class RootIsolation:
    intervals: Tuple[RootInterval, ...] = ()

    @property
    def root_count(self) -> int:
        return sum(iv.mult for iv in self.intervals)

    def to_json(self) -> List[Dict[str, Any]]:
        return [iv.to_dict() for iv in self.intervals]


@dataclass(frozen=True)
class RootCertificate:
    is_real_rooted: bool
    isolation: RootIsolation
    degree: int
    bound: Fraction


@dataclass
class PositivityReport:
    center: int
    symmetric: bool
    gamma_positive: Optional[bool]
    bi_gamma_positive: bool
    alternatingly_increasing: bool
    unimodal: bool
    mode_set: List[int] = field(default_factory=list)
    gamma: Optional[GammaVector] = None
    gamma_a: Optional[GammaVector] = None
    gamma_b: Optional[GammaVector] = None

    @property
    def observed_mode(self) -> Optional[int]:
        return max(self.mode_set) if self.mode_set else None

    def to_dict(self) -> Dict[str, Any]:
        def vec(g: Optional[GammaVector]) -> Optional[List[str]]:
            return None if g is None else [str(v) for v in g.gammas]

        return {
            "center": self.center,
            "symmetric": self.symmetric,
            "gamma_positive": self.gamma_positive,
            "bi_gamma_positive": self.bi_gamma_positive,
            "alternatingly_increasing": self.alternatingly_increasing,
            "unimodal": self.unimodal,
            "mode_set": list(self.mode_set),
            "gamma": vec(self.gamma),
            "gamma_a": vec(self.gamma_a),
            "gamma_b": vec(self.gamma_b),
        }
