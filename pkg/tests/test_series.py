from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from eulerian_roots import combinatorics as cb
from eulerian_roots.series import (
    TruncatedSeries,
    exp_series,
    log1p,
    norlund_from_egf,
    series_div,
    series_mul,
    verify_stirling_egf,
)


def S(values, order):
    return TruncatedSeries.from_coeffs(values, order)


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


class TestMul:
    def test_difference_of_squares(self):
        assert series_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1], 2)

    def test_exp_times_exp_neg(self):
        order = 10
        e = S([Fraction(1, factorial(i)) for i in range(order + 1)], order)
        einv = S([Fraction((-1) ** i, factorial(i)) for i in range(order + 1)], order)
        assert series_mul(e, einv) == TruncatedSeries.constant(1, order)

    def test_one_plus_t_times_log1p(self):
        got = series_mul(S([1, 1], 4), log1p(4))
        assert got == S([0, 1, Fraction(1, 2), Fraction(-1, 6), Fraction(1, 12)], 4)

    def test_truncates_to_shorter_operand(self):
        assert series_mul(S([1, 1], 5), S([1, 1], 2)).order == 2


class TestDiv:
    def test_geometric(self):
        order = 8
        got = series_div(TruncatedSeries.constant(1, order), S([1, -1], order))
        assert got == S([1] * (order + 1), order)

    def test_alternating_geometric(self):
        order = 8
        got = series_div(TruncatedSeries.constant(1, order), S([1, 1], order))
        assert got == S([(-1) ** i for i in range(order + 1)], order)

    def test_zero_constant_term_rejected(self):
        with pytest.raises(ZeroDivisionError):
            series_div(TruncatedSeries.constant(1, 3), S([0, 1], 3))

    @given(
        st.lists(small_fractions, min_size=1, max_size=13),
        st.lists(small_fractions, min_size=1, max_size=13),
        small_fractions.filter(lambda q: q != 0),
    )
    def test_mul_div_roundtrip(self, a_tail, b_tail, b0):
        order = 12
        a = S(a_tail, order)
        b = S([b0] + b_tail[1:], order)
        assert series_div(series_mul(a, b), b) == a


class TestLog1p:
    def test_leading_terms(self):
        assert log1p(3) == S([0, 1, Fraction(-1, 2), Fraction(1, 3)], 3)

    def test_exp_inverts(self):
        for order in (1, 4, 8, 20):
            got = exp_series(log1p(order))
            assert got == S([1, 1], order)

    def test_derivative_is_geometric(self):
        order = 6
        ser = log1p(order + 1)
        deriv = [i * ser[i] for i in range(1, order + 2)]
        assert deriv[: order + 1] == [Fraction((-1) ** i) for i in range(order + 1)]


class TestExp:
    def test_exp_of_zero(self):
        assert exp_series(TruncatedSeries.constant(0, 5)) == TruncatedSeries.constant(1, 5)

    def test_exp_of_t(self):
        got = exp_series(TruncatedSeries.identity(4))
        assert got == S([Fraction(1, factorial(i)) for i in range(5)], 4)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError):
            exp_series(TruncatedSeries.constant(1, 4))


class TestNorlundEgf:
    def test_convention(self):
        assert norlund_from_egf(0) == [Fraction(1)]

    def test_first_values(self):
        assert norlund_from_egf(2) == [Fraction(1), Fraction(-1, 2), Fraction(5, 6)]

    def test_fifth_value(self):
        assert norlund_from_egf(5)[5] == Fraction(-475, 12)

    def test_agrees_with_integral_route(self):
        assert norlund_from_egf(40) == cb.norlund_numbers(40)


class TestStirlingEgf:
    @pytest.mark.parametrize("j,order", [(1, 5), (2, 8), (5, 12)])
    def test_examples(self, j, order):
        assert verify_stirling_egf(j, order)

    def test_all_columns_to_ten(self):
        assert all(verify_stirling_egf(j, 15) for j in range(1, 11))

    def test_order_below_j_rejected(self):
        with pytest.raises(ValueError):
            verify_stirling_egf(5, 4)
