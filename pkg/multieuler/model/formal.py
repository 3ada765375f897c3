"""Commutative Laurent polynomials over the alphabet {x, y, w, q}.

A :class:`FormalPoly` maps exponent vectors (ordered x, y, w, q) to nonzero
rational coefficients. Exponents may be negative: rules such as
``x -> x^2 y^2 / (2w)`` store ``1/w`` as ``w^-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Tuple, Union

from ..exceptions import ValidationException

ALPHABET = ("x", "y", "w", "q")
_INDEX = {letter: i for i, letter in enumerate(ALPHABET)}

Exponents = Tuple[int, int, int, int]
_ZERO_EXPS: Exponents = (0, 0, 0, 0)


def letter_index(letter: str) -> int:
    try:
        return _INDEX[letter]
    except KeyError:
        raise ValidationException(
            f"Unknown letter {letter!r}. Alphabet: {', '.join(ALPHABET)}"
        ) from None


def _to_vector(exponents: Mapping[str, int]) -> Exponents:
    vec = [0, 0, 0, 0]
    for letter, e in exponents.items():
        vec[letter_index(letter)] += int(e)
    return (vec[0], vec[1], vec[2], vec[3])


@dataclass(frozen=True)
class Monomial:
    """A single term ``coefficient * x^a y^b w^c q^d``; zero exponents are omitted."""

    exponents: Tuple[Tuple[str, int], ...] = ()
    coefficient: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        vec = _to_vector(dict(self.exponents))
        pairs = tuple((ALPHABET[i], e) for i, e in enumerate(vec) if e != 0)
        object.__setattr__(self, "exponents", pairs)
        object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.coefficient == 0:
            raise ValidationException("Monomial coefficient must be nonzero")

    @classmethod
    def of(cls, coefficient: Union[int, Fraction] = 1, **exponents: int) -> "Monomial":
        return cls(tuple(exponents.items()), Fraction(coefficient))

    @property
    def vector(self) -> Exponents:
        return _to_vector(dict(self.exponents))

    def exponent(self, letter: str) -> int:
        return self.vector[letter_index(letter)]


@dataclass(frozen=True)
class FormalPoly:
    terms_map: Mapping[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {
            tuple(exps): Fraction(c) for exps, c in self.terms_map.items() if c != 0
        }
        object.__setattr__(self, "terms_map", dict(sorted(clean.items())))

    @classmethod
    def zero(cls) -> "FormalPoly":
        return cls({})

    @classmethod
    def constant(cls, c: Union[int, Fraction]) -> "FormalPoly":
        return cls({_ZERO_EXPS: Fraction(c)})

    @classmethod
    def letter(cls, letter: str) -> "FormalPoly":
        vec = [0, 0, 0, 0]
        vec[letter_index(letter)] = 1
        return cls({tuple(vec): Fraction(1)})

    @classmethod
    def from_monomial(cls, monomial: Monomial) -> "FormalPoly":
        return cls({monomial.vector: monomial.coefficient})

    @classmethod
    def from_terms(cls, *terms: Tuple[Union[int, Fraction], Mapping[str, int]]) -> "FormalPoly":
        """Build from ``(coefficient, {"x": 1, "y": 2})`` pairs; like terms are combined."""
        acc: Dict[Exponents, Fraction] = {}
        for c, exps in terms:
            vec = _to_vector(exps)
            acc[vec] = acc.get(vec, Fraction(0)) + Fraction(c)
        return cls(acc)

    @property
    def is_zero(self) -> bool:
        return not self.terms_map

    def __len__(self) -> int:
        return len(self.terms_map)

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self.terms_map.items())

    def __hash__(self) -> int:
        return hash(tuple(self.terms_map.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalPoly):
            return NotImplemented
        return self.terms_map == other.terms_map

    def terms(self) -> List[Monomial]:
        """Terms in canonical order (lexicographic over x, y, w, q exponents)."""
        return [
            Monomial(tuple(zip(ALPHABET, exps)), c) for exps, c in self.terms_map.items()
        ]

    def letters(self) -> set:
        return {
            ALPHABET[i] for exps in self.terms_map for i, e in enumerate(exps) if e != 0
        }

    def coefficient(self, **exponents: int) -> Fraction:
        return self.terms_map.get(_to_vector(exponents), Fraction(0))

    def __neg__(self) -> "FormalPoly":
        return FormalPoly({e: -c for e, c in self.terms_map.items()})

    def __add__(self, other: "FormalPoly") -> "FormalPoly":
        acc = dict(self.terms_map)
        for exps, c in other.terms_map.items():
            acc[exps] = acc.get(exps, Fraction(0)) + c
        return FormalPoly(acc)

    def __sub__(self, other: "FormalPoly") -> "FormalPoly":
        return self + (-other)

    def __mul__(self, other: Union["FormalPoly", int, Fraction]) -> "FormalPoly":
        if not isinstance(other, FormalPoly):
            c = Fraction(other)
            return FormalPoly({e: c * v for e, v in self.terms_map.items()})
        acc: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms_map.items():
            for e2, c2 in other.terms_map.items():
                key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return FormalPoly(acc)

    __rmul__ = __mul__

    def to_records(self) -> List[Dict[str, Any]]:
        """Serializable form: sorted ``{"coeff": "p/q", "exps": {...}}`` records."""
        records = []
        for exps, c in self.terms_map.items():
            records.append({
                "coeff": f"{c.numerator}/{c.denominator}",
                "exps": {ALPHABET[i]: e for i, e in enumerate(exps) if e != 0},
            })
        return records

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.terms_map.items():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(ALPHABET[i])
                elif e != 0:
                    factors.append(f"{ALPHABET[i]}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)
