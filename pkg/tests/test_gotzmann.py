import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rep_corpus
from gotzcalc import (
    GotzmannRep,
    NoGotzmannRepresentation,
    NotIntegerValued,
    RationalPoly,
    binom_poly,
    gotzmann_hilbert_function,
    gotzmann_number,
    gotzmann_rep,
    gotzmann_sum,
    lemma3_rep,
    macaulay_growth_ok,
    macaulay_transform,
    regularity_bound,
    regularity_bound_twisted,
    rep_to_poly,
    scheme_hf_criterion,
)


def poly(*coeffs):
    return RationalPoly(coeffs)


valid_entries = st.lists(st.integers(0, 6), min_size=0, max_size=12).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


class TestRepToPoly:
    def test_worked_example(self):
        assert rep_to_poly(GotzmannRep((1, 1, 1, 0, 0))) == poly(2, 3)

    def test_empty_is_zero(self):
        assert rep_to_poly(GotzmannRep(())) == RationalPoly.zero()

    def test_two_term_cubic(self):
        # binom(d+3,3) + binom(d+1,2), expanded by hand
        expected = poly(1, Fraction(7, 3), Fraction(3, 2), Fraction(1, 6))
        assert rep_to_poly(GotzmannRep((3, 2))) == expected

    def test_validation(self):
        with pytest.raises(ValueError):
            GotzmannRep((1, 2))
        with pytest.raises(ValueError):
            GotzmannRep((2, -1))


class TestGotzmannRep:
    def test_worked_example(self):
        assert gotzmann_rep(poly(2, 3)).entries == (1, 1, 1, 0, 0)

    def test_degree_polynomial_has_none(self):
        # P(d) = d is the Hilbert polynomial of O(-1) on the line; the first
        # term would have to be binom(d+1, 1) = d + 1 and terms only add.
        with pytest.raises(NoGotzmannRepresentation):
            gotzmann_rep(poly(0, 1))

    def test_constant(self):
        assert gotzmann_rep(poly(5)).entries == (0,) * 5

    def test_negative_constant(self):
        with pytest.raises(NoGotzmannRepresentation):
            gotzmann_rep(poly(-2))

    def test_non_integer_valued(self):
        with pytest.raises(NotIntegerValued):
            gotzmann_rep(poly(0, Fraction(1, 2)))

    def test_negative_leading(self):
        with pytest.raises(NoGotzmannRepresentation):
            gotzmann_rep(poly(0, -1))

    @given(valid_entries)
    @settings(max_examples=300, deadline=None)
    def test_round_trip_uniqueness(self, entries):
        rep = GotzmannRep(entries)
        assert gotzmann_rep(rep_to_poly(rep)).entries == entries

    def test_round_trip_exhaustive_small(self):
        # every nonincreasing sequence with entries <= 3, length <= 5
        def sequences(length, cap):
            if length == 0:
                yield ()
                return
            for first in range(cap, -1, -1):
                for rest in sequences(length - 1, first):
                    yield (first,) + rest

        for length in range(0, 6):
            for entries in sequences(length, 3):
                rep = GotzmannRep(entries)
                assert gotzmann_rep(rep_to_poly(rep)).entries == entries

    @given(valid_entries)
    @settings(max_examples=200, deadline=None)
    def test_difference_compatibility(self, entries):
        # dropping every positive top by one matches the backward difference
        rep = GotzmannRep(entries)
        positive = rep.positive_part()
        lowered = GotzmannRep(tuple(a - 1 for a in positive))
        assert rep_to_poly(rep).difference() == rep_to_poly(lowered)

    @given(valid_entries)
    @settings(max_examples=200, deadline=None)
    def test_trailing_zero_count(self, entries):
        rep = GotzmannRep(entries)
        P = rep_to_poly(rep)
        positive = rep.positive_part()
        partial = RationalPoly.zero()
        for i, a in enumerate(positive):
            partial = partial + binom_poly(a - i, a)
        residual = P - partial
        zeros = len(entries) - len(positive)
        assert residual == RationalPoly.constant(zeros)


class TestGotzmannNumber:
    def test_examples(self):
        assert gotzmann_number(poly(2, 3)) == 5
        assert gotzmann_number(poly(2, 2)) == 3

    def test_plane_binomial(self):
        # binom(d+3, 2): the representation comes out as [2, 1, 0, 0]
        P = binom_poly(3, 2)
        rep = gotzmann_rep(P)
        assert rep_to_poly(rep) == P
        assert rep.entries == (2, 1, 0, 0)
        assert gotzmann_number(P) == 4


class TestGotzmannSum:
    def test_additive_identity(self):
        assert gotzmann_sum(poly(2, 3), RationalPoly.zero()).entries == (1, 1, 1, 0, 0)

    def test_constants(self):
        assert gotzmann_sum(poly(1), poly(1)).entries == (0, 0)

    def test_lines(self):
        assert gotzmann_sum(poly(2, 2), poly(1, 1)) == gotzmann_rep(poly(3, 3))

    def test_precondition_propagates(self):
        with pytest.raises(NoGotzmannRepresentation):
            gotzmann_sum(poly(0, 1), poly(2, 3))

    def test_closure_on_random_pairs(self):
        # degree <= 3: Gotzmann numbers of sums blow up quickly with degree
        reps = rep_corpus(seed=20240, count=60, max_len=6, max_entry=3)
        for P_rep, Q_rep in zip(reps[::2], reps[1::2]):
            gotzmann_sum(rep_to_poly(P_rep), rep_to_poly(Q_rep))  # must not raise


class TestLemma3:
    def test_base(self):
        assert lemma3_rep(0).entries == (0,)

    def test_line(self):
        assert lemma3_rep(1).entries == (1, 0)

    @pytest.mark.parametrize("n", range(0, 11))
    def test_identity(self, n):
        assert rep_to_poly(lemma3_rep(n)) == binom_poly(n + 1, n)


class TestHilbertFunction:
    def test_starts_at_one(self):
        rep = gotzmann_rep(poly(2, 3))
        assert gotzmann_hilbert_function(rep, 0) == 1

    def test_agrees_with_polynomial_from_s_minus_one(self):
        rep = gotzmann_rep(poly(2, 3))
        for d in range(4, 12):
            assert gotzmann_hilbert_function(rep, d) == 3 * d + 2

    def test_partial_sum(self):
        rep = gotzmann_rep(poly(2, 3))
        assert gotzmann_hilbert_function(rep, 1) == 3

    def test_classical_growth_and_eventual_equality(self):
        # The built function obeys Macaulay growth H(d+1) <= H(d)^<d> at every
        # degree, with equality from d = s on.  The reversed orientation
        # (scheme_hf_criterion) fails for this very function: H(3) = 10 has
        # 10^<3> = 15 > 14 = H(4).
        rep = gotzmann_rep(poly(2, 3))
        s = rep.s
        H = [gotzmann_hilbert_function(rep, d) for d in range(s + 4)]
        assert H == [1, 3, 6, 10, 14, 17, 20, 23, 26]
        for d in range(1, len(H) - 1):
            assert macaulay_growth_ok(H[d], H[d + 1], d)
        for d in range(s, len(H) - 1):
            assert macaulay_transform(H[d], d) == H[d + 1]
        assert macaulay_transform(H[3], 3) == 15
        assert not scheme_hf_criterion(H)

    def test_classical_growth_on_random_reps(self):
        for rep in rep_corpus(seed=7321, count=80, max_len=8, max_entry=5):
            s = rep.s
            H = [gotzmann_hilbert_function(rep, d) for d in range(s + 4)]
            assert H[0] == 1
            P = rep_to_poly(rep)
            for d in range(len(H)):
                if d >= s - 1:
                    assert H[d] == P(d)
            for d in range(1, len(H) - 1):
                assert macaulay_growth_ok(H[d], H[d + 1], d)
            for d in range(max(s, 1), len(H) - 1):
                assert macaulay_transform(H[d], d) == H[d + 1]


class TestRegularityBound:
    def test_examples(self):
        assert regularity_bound(poly(2, 2)) == 3
        assert regularity_bound(poly(2, 3)) == 5
        assert regularity_bound(poly(1)) == 1

    def test_twisted(self):
        P = poly(4, Fraction(11, 3), 4, Fraction(1, 3))
        s = gotzmann_number(P)
        assert s == 179
        assert regularity_bound_twisted(P, 4) == s + 4
        assert regularity_bound_twisted(poly(2, 2), 0) == 3
        assert regularity_bound_twisted(poly(1), 2) == 3

    def test_negative_twist_rejected(self):
        with pytest.raises(ValueError):
            regularity_bound_twisted(poly(1), -1)
