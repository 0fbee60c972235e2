from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gotzcalc import BinomialTerm, RationalPoly, binom_poly, interpolate


def poly(*coeffs):
    return RationalPoly(coeffs)


rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
small_polys = st.lists(rationals, max_size=6).map(RationalPoly)


class TestBinomPoly:
    def test_empty_product_is_one(self):
        assert binom_poly(0, 0) == poly(1)

    def test_linear(self):
        assert binom_poly(1, 1) == poly(1, 1)  # d + 1

    def test_cubic_expansion(self):
        # (d+1)(d+2)(d+3)/6 expanded by hand
        assert binom_poly(3, 3) == poly(1, Fraction(11, 6), 1, Fraction(1, 6))

    @pytest.mark.parametrize("a", range(0, 9))
    @pytest.mark.parametrize("c", range(-8, 9))
    def test_matches_product_formula(self, c, a):
        P = binom_poly(c, a)
        for d in range(-10, 11):
            expected = Fraction(1)
            for j in range(1, a + 1):
                expected *= Fraction(d + c - a + j, j)
            assert P(d) == expected

    @pytest.mark.parametrize("a", range(1, 9))
    def test_degree_and_leading_coefficient(self, a):
        from math import factorial

        P = binom_poly(-3, a)
        assert P.degree == a
        assert P.leading_coefficient == Fraction(1, factorial(a))

    @pytest.mark.parametrize("c", range(-6, 7))
    @pytest.mark.parametrize("a", range(0, 7))
    def test_integer_valued(self, c, a):
        assert binom_poly(c, a).is_integer_valued()

    def test_binomial_term_wrapper(self):
        assert BinomialTerm(-3, 0).poly() == poly(1)
        assert BinomialTerm(2, 1).poly() == poly(2, 1)


class TestEval:
    def test_direct_substitution(self):
        assert poly(2, 3)(4) == 14

    def test_root(self):
        assert binom_poly(1, 1)(-1) == 0

    def test_constant_term(self):
        P = poly(4, Fraction(11, 3), 4, Fraction(1, 3))
        assert P(0) == 4


class TestDifference:
    def test_linear(self):
        assert poly(2, 3).difference() == poly(3)

    def test_constant(self):
        assert poly(7).difference() == RationalPoly.zero()

    @pytest.mark.parametrize("a", range(1, 6))
    @pytest.mark.parametrize("c", range(-4, 5))
    def test_binomial_ladder(self, c, a):
        assert binom_poly(c, a).difference() == binom_poly(c - 1, a - 1)

    @given(small_polys)
    def test_drops_degree_by_one(self, P):
        dP = P.difference()
        if P.degree in (None, 0):
            assert dP.is_zero()
        else:
            assert dP.degree == P.degree - 1


class TestShift:
    def test_examples(self):
        assert poly(2, 3).shift(1) == poly(5, 3)
        assert poly(0, 0, 1).shift(-1) == poly(1, -2, 1)
        assert binom_poly(1, 1).shift(1) == binom_poly(2, 1)

    @given(small_polys)
    def test_commutes_with_difference(self, P):
        assert P.shift(1).difference() == P.difference().shift(1)

    @given(small_polys, st.integers(-5, 5))
    def test_shift_inverts(self, P, t):
        assert P.shift(t).shift(-t) == P


class TestIntegerValued:
    def test_cubic_hilbert_polynomial(self):
        assert poly(4, Fraction(11, 3), 4, Fraction(1, 3)).is_integer_valued()

    def test_half_d(self):
        assert not poly(0, Fraction(1, 2)).is_integer_valued()

    def test_zero(self):
        assert RationalPoly.zero().is_integer_valued()


class TestInterpolate:
    def test_line(self):
        assert interpolate([(0, Fraction(2)), (1, Fraction(5))]) == poly(2, 3)

    def test_constant(self):
        pts = [(0, Fraction(1)), (1, Fraction(1)), (2, Fraction(1))]
        assert interpolate(pts) == poly(1)

    def test_quot_example_polynomial(self):
        P = poly(2, 2)  # 2(d+1)
        pts = [(d, P(d)) for d in range(4)]
        assert interpolate(pts) == P

    def test_duplicate_nodes_rejected(self):
        with pytest.raises(ValueError):
            interpolate([(1, Fraction(1)), (1, Fraction(2))])

    @given(small_polys)
    def test_round_trip(self, P):
        deg = P.degree if P.degree is not None else 0
        pts = [(d, P(d)) for d in range(deg + 1)]
        assert interpolate(pts) == P


class TestTextFormat:
    @pytest.mark.parametrize(
        "text,coeffs",
        [
            ("2,3", (2, 3)),
            ("4,11/3,4,1/3", (4, Fraction(11, 3), 4, Fraction(1, 3))),
            ("0", ()),
            ("-1,0,1/2", (-1, 0, Fraction(1, 2))),
        ],
    )
    def test_parse(self, text, coeffs):
        assert RationalPoly.from_text(text) == RationalPoly(coeffs)

    def test_round_trip(self):
        for text in ("2,3", "4,11/3,4,1/3", "0", "-5"):
            P = RationalPoly.from_text(text)
            assert RationalPoly.from_text(P.to_text()) == P

    def test_bad_text(self):
        with pytest.raises(ValueError):
            RationalPoly.from_text("2;3")
