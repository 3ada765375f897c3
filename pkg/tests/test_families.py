"""Family polynomials by every construction method."""

import pytest

from multieuler import config
from multieuler.exceptions import ValidationException
from multieuler.families import (
    family_center,
    family_decomposition_parts,
    family_polynomial,
    grammar_formal,
)
from multieuler.model.poly import UniPoly

GOLDEN = {
    ("P", 1): (1,),
    ("P", 2): (1, 4, 1),
    ("P", 3): (1, 20, 48, 20, 1),
    ("Q", 1): (1, 2),
    ("Q", 2): (1, 12, 15, 2),
    ("S", 1): (1, 3),
    ("S", 2): (1, 31, 55, 9),
    ("S", 3): (1, 209, 1884, 2828, 811, 27),
    ("T", 1): (1, 8, 3),
    ("T", 2): (1, 66, 258, 146, 9),
}


class TestFamilyPolynomial:
    """Every method reproduces the known small polynomials."""

    @pytest.mark.parametrize("method", config.AVAILABLE_METHODS)
    @pytest.mark.parametrize("key", sorted(GOLDEN))
    def test_golden(self, key, method):
        family, n = key
        assert family_polynomial(family, n, method).int_coeffs() == list(GOLDEN[key])

    @pytest.mark.parametrize("family", config.AVAILABLE_FAMILIES)
    def test_methods_agree(self, family):
        for n in range(1, 4):
            results = {m: family_polynomial(family, n, m) for m in config.AVAILABLE_METHODS}
            assert len(set(results.values())) == 1, results

    def test_unknown_family(self):
        with pytest.raises(ValidationException, match="Unknown family 'X'"):
            family_polynomial("X", 2, "rec")

    def test_unknown_method(self):
        with pytest.raises(ValidationException, match="Unknown method 'guess'"):
            family_polynomial("P", 2, "guess")

    @pytest.mark.parametrize("n", [0, -1, "2"])
    def test_bad_n(self, n):
        with pytest.raises(ValidationException, match="positive integer"):
            family_polynomial("P", n, "rec")


class TestCentersAndParts:
    """Declared degrees and symmetric parts."""

    @pytest.mark.parametrize(
        "family, expected", [("P", 4), ("Q", 5), ("S", 5), ("T", 6)]
    )
    def test_center(self, family, expected):
        assert family_center(family, 3) == expected

    def test_parts(self):
        assert family_decomposition_parts("P", 2) == (UniPoly.of(1, 4, 1), UniPoly.zero())
        expected = (UniPoly.of(1, 11, 11, 1), UniPoly.of(1, 4, 1))
        assert family_decomposition_parts("Q", 2) == expected
        assert family_decomposition_parts("S", 1) == (UniPoly.of(1, 1), UniPoly.of(2))
        assert family_decomposition_parts("T", 1) == (UniPoly.of(1, 6, 1), UniPoly.of(2, 2))

    def test_grammar_formal_q1(self):
        f = grammar_formal("Q", 1)
        assert f.letters() <= {"x", "y", "w"}
        # w y^2 + 2 x y w
        assert f.coefficient(y=2, w=1) == 1
        assert f.coefficient(x=1, y=1, w=1) == 2
        assert len(f) == 2
