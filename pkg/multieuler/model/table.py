from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Tuple

from ..exceptions import NegativeEntryException, ValidationException
from .poly import UniPoly, from_ints

TRI_FAMILIES = ("P", "Q", "S", "T", "R")
GAMMA_KINDS = ("p", "r", "eta_plus", "eta_minus")

Row = Tuple[int, ...]


def _check_nonnegative(tag: str, rows: Tuple[Row, ...], first: int) -> None:
    for i, row in enumerate(rows):
        for k, value in enumerate(row):
            if value < 0:
                raise NegativeEntryException(
                    "Negative table entry", table=tag, n=first + i, k=k
                )


@dataclass(frozen=True)
class TriTable:
    """Coefficient triangle; ``rows[0]`` holds row n = 1.

    Out-of-range reads return 0, so recurrences never special-case boundaries.
    """

    family: str
    rows: Tuple[Row, ...]

    def __post_init__(self) -> None:
        if self.family not in TRI_FAMILIES:
            raise ValidationException(f"Unknown table family {self.family!r}")
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))
        _check_nonnegative(self.family, self.rows, 1)

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def row(self, n: int) -> Row:
        if not 1 <= n <= self.n_max:
            raise ValidationException(f"Row {n} not in table {self.family} (1..{self.n_max})")
        return self.rows[n - 1]

    def entry(self, n: int, k: int) -> int:
        if not 1 <= n <= self.n_max or k < 0:
            return 0
        row = self.rows[n - 1]
        return row[k] if k < len(row) else 0

    def poly(self, n: int) -> UniPoly:
        return from_ints(self.row(n))

    def csv_rows(self) -> Iterator[Tuple[str, int, int, int]]:
        for n, row in enumerate(self.rows, start=1):
            for k, value in enumerate(row):
                yield self.family, n, k, value


@dataclass(frozen=True)
class GammaTable:
    """Gamma-coefficient rows; ``rows[0]`` holds index ``first``.

    For ``p`` and ``r`` the index is n. For the eta kinds it is the combined
    index m (2n for S_n, 2n+1 for T_n), starting at 1.
    """

    kind: str
    rows: Tuple[Row, ...]
    first: int = 1

    def __post_init__(self) -> None:
        if self.kind not in GAMMA_KINDS:
            raise ValidationException(f"Unknown gamma table kind {self.kind!r}")
        object.__setattr__(self, "rows", tuple(tuple(int(v) for v in r) for r in self.rows))
        _check_nonnegative(self.kind, self.rows, self.first)

    @property
    def last(self) -> int:
        return self.first + len(self.rows) - 1

    def row(self, index: int) -> Row:
        if not self.first <= index <= self.last:
            raise ValidationException(
                f"Row {index} not in table {self.kind} ({self.first}..{self.last})"
            )
        return self.rows[index - self.first]

    def entry(self, index: int, k: int) -> int:
        if not self.first <= index <= self.last or k < 0:
            return 0
        row = self.rows[index - self.first]
        return row[k] if k < len(row) else 0

    def csv_rows(self) -> Iterator[Tuple[str, int, int, int]]:
        for i, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield self.kind, self.first + i, k, value
