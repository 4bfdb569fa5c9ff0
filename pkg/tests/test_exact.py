"""Exact rational pipeline: series algebra, coefficients, serialization."""

import math
from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radpfd.exact import (
    CoefficientVector,
    RationalTaylorSeries,
    coefficient_range,
    decimal_str,
    exact_coefficients,
    float_coefficients,
    parse_rational,
    principal_part_remainder,
    rational_str,
    series_reciprocal,
    unit_factor,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


def series_strategy(min_order=0, max_order=6, unit=False):
    def build(order, coeffs):
        cs = list(coeffs) + [Fraction(0)] * (order + 1 - len(coeffs))
        if unit and cs[0] == 0:
            cs[0] = Fraction(1)
        return RationalTaylorSeries(tuple(cs[: order + 1]), order)

    return st.integers(min_order, max_order).flatmap(
        lambda order: st.lists(rationals, min_size=1, max_size=order + 1).map(
            lambda coeffs: build(order, coeffs)
        )
    )


class TestSeriesAlgebra:
    def test_one_is_multiplicative_identity(self):
        s = RationalTaylorSeries((Fraction(2), Fraction(-3), Fraction(5)), 2)
        assert s * RationalTaylorSeries.one(2) == s

    def test_multiplication_truncates_to_min_order(self):
        a = RationalTaylorSeries.one(5)
        b = RationalTaylorSeries.one(3)
        assert (a * b).truncation_order == 3

    def test_reciprocal_of_non_unit_rejected(self):
        s = RationalTaylorSeries((Fraction(0), Fraction(1)), 1)
        with pytest.raises(ValueError, match="not a unit"):
            s.reciprocal()

    @given(series_strategy(unit=True))
    @settings(max_examples=60)
    def test_reciprocal_is_right_inverse(self, s):
        prod = s * series_reciprocal(s)
        assert prod == RationalTaylorSeries.one(s.truncation_order)

    @given(series_strategy(unit=True))
    @settings(max_examples=60)
    def test_reciprocal_is_involution(self, s):
        assert series_reciprocal(series_reciprocal(s)) == s

    @given(series_strategy(), series_strategy())
    @settings(max_examples=60)
    def test_multiplication_commutes(self, a, b):
        assert a * b == b * a


class TestUnitFactor:
    def test_constant_term_is_one(self):
        for j in (1, 2, 3, 7, 20):
            assert unit_factor(j, 8).coefficients[0] == 1

    def test_j_one_is_identity_series(self):
        assert unit_factor(1, 6) == RationalTaylorSeries.one(6)

    def test_rejects_nonpositive_j(self):
        with pytest.raises(ValueError):
            unit_factor(0, 4)

    def test_reciprocal_recovers_binomial_coefficients(self):
        # 1/v_j has coefficients binom(j, m+1)/j by construction.
        j, order = 5, 4
        w = series_reciprocal(unit_factor(j, order))
        for m in range(order + 1):
            assert w.coefficients[m] == Fraction(math.comb(j, m + 1), j)


class TestCoefficients:
    def test_hand_values(self, small_vectors):
        assert small_vectors[1].coeff(1) == Fraction(-1)
        assert small_vectors[2].coeff(1) == Fraction(-1, 4)
        assert small_vectors[2].coeff(2) == Fraction(1, 2)
        assert small_vectors[3].coeff(1) == Fraction(-17, 72)

    def test_top_coefficient_identity(self, small_vectors):
        for N, vec in small_vectors.items():
            assert vec.coeff(N) == Fraction((-1) ** N, math.factorial(N))

    def test_single_matches_range(self, small_vectors):
        for N in (1, 7, 19):
            assert exact_coefficients(N) == small_vectors[N]

    def test_rejects_n_zero(self):
        with pytest.raises(ValueError, match="empty product"):
            exact_coefficients(0)

    def test_coeff_index_validation(self, small_vectors):
        vec = small_vectors[4]
        with pytest.raises(ValueError):
            vec.coeff(0)
        with pytest.raises(ValueError):
            vec.coeff(5)

    def test_range_bounds_validation(self):
        with pytest.raises(ValueError):
            list(coefficient_range(5, 4))

    def test_vector_is_well_formed(self, small_vectors):
        vec = small_vectors[12]
        assert isinstance(vec, CoefficientVector)
        assert len(vec.values) == 12


class TestFloatTwin:
    def test_matches_rationals_at_n_40(self):
        fv = float_coefficients(40, 256)
        ev = exact_coefficients(40)
        with mp.workprec(300):
            for l in (1, 2, 20, 40):
                q = ev.coeff(l)
                ex = mp.mpf(q.numerator) / q.denominator
                assert abs(fv[l - 1] - ex) <= mp.mpf(2) ** (-200) * abs(ex)

    def test_rejects_low_precision(self):
        with pytest.raises(ValueError):
            float_coefficients(5, 32)


class TestRemainder:
    def test_no_pole_left_at_one(self):
        # f(x) - principal part = 1/(4(x+1)) for N = 2; finite at x = 1.
        for x in (Fraction(3, 2), Fraction(1, 2), Fraction(0), Fraction(-3)):
            assert principal_part_remainder(2, x) == Fraction(1, 4) / (x + 1)

    def test_value_just_off_the_pole(self):
        eps = Fraction(1, 10**6)
        near = principal_part_remainder(2, 1 + eps)
        assert near == 1 / (8 + 4 * eps)

    def test_rejects_product_poles(self):
        with pytest.raises(ValueError):
            principal_part_remainder(2, Fraction(1))
        with pytest.raises(ValueError):
            principal_part_remainder(2, Fraction(-1))

    @given(st.integers(1, 8), rationals)
    @settings(max_examples=40)
    def test_reconstructs_the_product(self, N, x):
        # principal part + remainder must equal the product wherever the
        # product is defined.
        for j in range(1, N + 1):
            if x**j == 1:
                return
        vec = exact_coefficients(N)
        total = principal_part_remainder(N, x) + sum(
            vec.coeff(l) / (x - 1) ** l for l in range(1, N + 1)
        )
        direct = Fraction(1)
        for j in range(1, N + 1):
            direct /= 1 - x**j
        assert total == direct


class TestSerialization:
    @given(rationals)
    @settings(max_examples=80)
    def test_rational_round_trip(self, q):
        assert parse_rational(rational_str(q)) == q

    def test_rational_str_always_shows_denominator(self):
        assert rational_str(Fraction(-1)) == "-1/1"
        assert rational_str(Fraction(1, 2)) == "1/2"

    def test_decimal_str_exact_dyadic(self):
        assert decimal_str(Fraction(3, 16)) == "0.1875"

    def test_decimal_str_seventeen_digits(self):
        s = decimal_str(Fraction(-17, 72))
        assert s.startswith("-0.2361111111111111")
