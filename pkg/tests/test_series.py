import pytest

from multieuler.exceptions import ValidationException
from multieuler.model.poly import UniPoly
from multieuler.series import (
    check_macmahon,
    check_p_identity,
    check_q_identity,
    expand_over_one_minus_x_pow,
    inverse_power_series,
)


class TestExpansion:
    """f / (1-x)^m by repeated prefix sums."""

    @pytest.mark.parametrize(
        "f, m, order, expected",
        [
            (UniPoly.constant(1), 1, 3, (1, 1, 1, 1)),
            (UniPoly.of(1, 4, 1), 5, 4, (1, 9, 36, 100, 225)),
            (UniPoly.constant(1), 3, 3, (1, 3, 6, 10)),
        ],
    )
    def test_values(self, f, m, order, expected):
        assert expand_over_one_minus_x_pow(f, m, order).coeffs == expected

    @pytest.mark.parametrize("m", [1, 2, 5, 9])
    def test_matches_inverse_power(self, m):
        f = UniPoly.of(2, -1, 7, 3)
        series = expand_over_one_minus_x_pow(f, m, 12)
        inverse = inverse_power_series(m, 12)
        for t in range(13):
            assert series[t] == sum(f[i] * inverse[t - i] for i in range(t + 1))

    def test_inverse_power_series(self):
        assert inverse_power_series(3, 3).coeffs == (1, 3, 6, 10)

    def test_bad_arguments(self):
        with pytest.raises(ValidationException, match="nonnegative"):
            expand_over_one_minus_x_pow(UniPoly.constant(1), 1, -1)
        with pytest.raises(ValidationException, match="positive"):
            expand_over_one_minus_x_pow(UniPoly.constant(1), 0, 3)
        with pytest.raises(ValidationException, match="positive"):
            inverse_power_series(0, 3)


class TestIdentities:
    """Rational generating functions of the families."""

    @pytest.mark.parametrize("n, order", [(1, 10), (2, 20), (5, 30), (8, 30)])
    def test_p_identity(self, n, order):
        assert check_p_identity(n, order)

    def test_p_identity_negative_control(self):
        assert not check_p_identity(2, 20, poly=UniPoly.of(1, 5, 1))

    @pytest.mark.parametrize("n, order", [(1, 10), (2, 15), (6, 30)])
    def test_q_identity(self, n, order):
        assert check_q_identity(n, order)

    def test_q_identity_negative_control(self):
        assert not check_q_identity(2, 15, poly=UniPoly.of(1, 12, 15, 3))

    def test_constant_term(self):
        for n in range(1, 5):
            assert expand_over_one_minus_x_pow(UniPoly.constant(1), 2 * n + 2, 0)[0] == 1

    def test_bad_n(self):
        with pytest.raises(ValidationException, match="positive"):
            check_p_identity(0)
        with pytest.raises(ValidationException, match="positive"):
            check_q_identity(0)

    @pytest.mark.parametrize("p", [(2, 2), (2, 2, 1), (1, 1, 1), (3, 1), (1, 2, 1, 2)])
    def test_macmahon(self, p):
        assert check_macmahon(p, 12)
