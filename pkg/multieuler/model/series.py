from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..exceptions import ValidationException


@dataclass(frozen=True)
class TruncSeries:
    """Power series c_0 + c_1 x + ... + c_N x^N known up to ``order`` N."""

    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if len(self.coeffs) != self.order + 1:
            raise ValidationException(
                f"Series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    def __getitem__(self, t: int) -> Fraction:
        return self.coeffs[t]
