"""Context-free grammar calculus over the alphabet {x, y, w, q}.

A grammar maps each letter to a formal polynomial; its formal derivative
``D_G`` is the linear operator that applies the rules through the Leibniz
product rule. Negative exponents follow the same power rule, which is the
quotient rule for formal fractions such as ``x^2 y^2 / (2w)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Union

from .exceptions import ExtractionException, GrammarException
from .model.formal import ALPHABET, Exponents, FormalPoly, Monomial, letter_index
from .model.poly import UniPoly

logger = logging.getLogger(__name__)

GRAMMAR_IDS = ("G1", "G2", "G3", "G4", "G5", "G6", "stirling")


@dataclass(frozen=True)
class Grammar:
    name: str
    rules: Mapping[str, FormalPoly]

    def rule(self, letter: str) -> FormalPoly:
        try:
            return self.rules[letter]
        except KeyError:
            raise GrammarException(
                "letter without rule", letter=letter, grammar=self.name
            ) from None


def _p(*terms) -> FormalPoly:
    return FormalPoly.from_terms(*terms)


def _total(name: str, rules: Dict[str, FormalPoly]) -> Grammar:
    # q is a passive marker and letters the grammar never rewrites map to 0
    full = {letter: rules.get(letter, FormalPoly.zero()) for letter in ALPHABET}
    return Grammar(name, full)


def builtin_grammar(grammar_id: str) -> Grammar:
    """Return one of the built-in grammars G1..G6 or the Stirling example."""
    half = Fraction(1, 2)
    if grammar_id in ("G1", "G3", "G5"):
        w = FormalPoly.letter("w")
        return _total(grammar_id, {"x": w, "y": w})
    if grammar_id == "G2":
        # (1+q)^2 x^2 y^2 / (2w)
        xy_rule = _p(
            (half, {"x": 2, "y": 2, "w": -1}),
            (1, {"x": 2, "y": 2, "w": -1, "q": 1}),
            (half, {"x": 2, "y": 2, "w": -1, "q": 2}),
        )
        # xy(q(x+y) + (1+q^2)y)
        w_rule = _p(
            (1, {"x": 2, "y": 1, "q": 1}),
            (1, {"x": 1, "y": 2, "q": 1}),
            (1, {"x": 1, "y": 2}),
            (1, {"x": 1, "y": 2, "q": 2}),
        )
        return _total(grammar_id, {"x": xy_rule, "y": xy_rule, "w": w_rule})
    if grammar_id == "G4":
        xy_rule = _p((half, {"x": 2, "y": 2, "w": -1}))
        return _total(grammar_id, {"x": xy_rule, "y": xy_rule, "w": _p((1, {"x": 1, "y": 2}))})
    if grammar_id == "G6":
        xy_rule = _p((2, {"x": 2, "y": 2, "w": -1}))
        w_rule = _p((1, {"x": 2, "y": 1}), (3, {"x": 1, "y": 2}))
        return _total(grammar_id, {"x": xy_rule, "y": xy_rule, "w": w_rule})
    if grammar_id == "stirling":
        return _total(grammar_id, {"x": _p((1, {"x": 1, "y": 1})), "y": FormalPoly.letter("y")})
    raise GrammarException(
        f"Unknown grammar {grammar_id!r}. Available: {', '.join(GRAMMAR_IDS)}",
        grammar=grammar_id,
    )


def derive(g: Grammar, f: FormalPoly) -> FormalPoly:
    """Apply the formal derivative D_g to f."""
    acc: Dict[Exponents, Fraction] = {}
    for exps, c in f:
        for i, e in enumerate(exps):
            if e == 0:
                continue
            rule = g.rule(ALPHABET[i])
            lowered = list(exps)
            lowered[i] -= 1
            scale = c * e
            for r_exps, r_c in rule:
                key = (
                    lowered[0] + r_exps[0],
                    lowered[1] + r_exps[1],
                    lowered[2] + r_exps[2],
                    lowered[3] + r_exps[3],
                )
                acc[key] = acc.get(key, Fraction(0)) + scale * r_c
    result = FormalPoly(acc)
    logger.debug(f"D_{g.name}: {len(f)} terms -> {len(result)} terms")
    return result


def iterate_pair(ga: Grammar, gb: Grammar, n: int, trailing: Optional[str] = None) -> FormalPoly:
    """(D_b D_a)^n (x), optionally followed by one more D_a when ``trailing == "a"``."""
    if n < 1:
        raise GrammarException(f"iterate_pair needs n >= 1, got {n}")
    if trailing not in (None, "none", "a"):
        raise GrammarException(f"trailing must be 'none' or 'a', got {trailing!r}")
    f = FormalPoly.letter("x")
    for _ in range(n):
        f = derive(gb, derive(ga, f))
    if trailing == "a":
        f = derive(ga, f)
    return f


def iterate(g: Grammar, n: int, start: str = "x") -> FormalPoly:
    """D_g^n applied to a single letter."""
    f = FormalPoly.letter(start)
    for _ in range(n):
        f = derive(g, f)
    return f


def specialize(f: FormalPoly, bindings: Mapping[str, Union[int, Fraction]]) -> FormalPoly:
    """Substitute rational values for some letters and renormalize."""
    indices = {letter_index(letter): Fraction(v) for letter, v in bindings.items()}
    acc: Dict[Exponents, Fraction] = {}
    for exps, c in f:
        key = list(exps)
        value = c
        for i, v in indices.items():
            e = exps[i]
            if e == 0:
                continue
            if v == 0 and e < 0:
                raise GrammarException(
                    "division by zero", letter=ALPHABET[i],
                    detail=f"binding 0 into exponent {e}",
                )
            value *= v ** e
            key[i] = 0
        vec = (key[0], key[1], key[2], key[3])
        acc[vec] = acc.get(vec, Fraction(0)) + value
    return FormalPoly(acc)


def extract_univariate(
    f: FormalPoly,
    divisor: Monomial,
    collect: str,
    set_one: Iterable[str] = (),
) -> UniPoly:
    """Divide by a monomial, set some letters to 1 and read off a polynomial in ``collect``."""
    div = divisor.vector
    collect_i = letter_index(collect)
    ones = {letter_index(letter) for letter in set_one}
    coeffs: Dict[int, Fraction] = {}
    for exps, c in f:
        quotient = [e - d for e, d in zip(exps, div)]
        if any(e < 0 for e in quotient):
            raise ExtractionException(
                "not divisible", reason="not divisible", detail=str(f)
            )
        for i, e in enumerate(quotient):
            if i != collect_i and i not in ones and e != 0:
                raise ExtractionException(
                    "residual letters remain", reason="residual letters remain",
                    letter=ALPHABET[i],
                )
        power = quotient[collect_i]
        coeffs[power] = coeffs.get(power, Fraction(0)) + c / divisor.coefficient
    top = max(coeffs) if coeffs else -1
    poly = UniPoly(tuple(coeffs.get(k, Fraction(0)) for k in range(top + 1)))
    if not poly.is_integral():
        raise ExtractionException(
            "non-integral coefficient", reason="non-integral coefficient", detail=str(poly)
        )
    if any(c < 0 for c in poly.coeffs):
        raise ExtractionException(
            "negative coefficient", reason="negative coefficient", detail=str(poly)
        )
    return poly


def stirling_row(n: int) -> UniPoly:
    """Sum_k S(n, k) y^k read from D^n(x) / x under the grammar {x -> xy, y -> y}."""
    return extract_univariate(
        iterate(builtin_grammar("stirling"), n), Monomial.of(1, x=1), collect="y"
    )
