from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from ..exceptions import ValidationException


@dataclass(frozen=True)
class Word:
    """A (signed) multiset permutation; ``-i`` stands for the barred letter."""

    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        if any(e == 0 for e in self.entries):
            raise ValidationException("Word entries must be nonzero", detail=str(self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def serialize(self) -> str:
        """One-line debug form: entries space-separated, negatives with a leading '-'."""
        return " ".join(str(e) for e in self.entries)


@dataclass(frozen=True)
class StatRecord:
    des: int
    asc: int
    plat: int
    des_B: int
    asc_B: int
    des_star: int
    asc_star: int
    des_r: int
    neg: int


@dataclass(frozen=True)
class InvSeq:
    """An s-inversion sequence ``e`` with ``0 <= e_i < s_i``."""

    s: Tuple[int, ...]
    e: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.s) != len(self.e):
            raise ValidationException("s and e must have the same length")
        if any(si < 1 for si in self.s):
            raise ValidationException("s entries must be positive", detail=str(self.s))
        if any(not 0 <= ei < si for ei, si in zip(self.e, self.s)):
            raise ValidationException("e entries must satisfy 0 <= e_i < s_i", detail=str(self.e))

    @property
    def asc(self) -> int:
        """Ascents e_i/s_i < e_{i+1}/s_{i+1}, including i = 0 with e_0 = 0, s_0 = 1."""
        count = 0
        prev_e, prev_s = 0, 1
        for ei, si in zip(self.e, self.s):
            if prev_e * si < ei * prev_s:
                count += 1
            prev_e, prev_s = ei, si
        return count
