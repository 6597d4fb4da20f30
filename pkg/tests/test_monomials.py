"""Exponent vectors, shifted divisibility, and character vectors."""

import pytest

from deltamon.errors import ArityMismatchError, CapExceededError
from deltamon.exponents import ExpPoly
from deltamon.monomials import (
    ExpVector,
    char_leq,
    divides_shifted,
    minimal_elements,
    pattern_monomial,
    splits,
    validate_char_vector,
)

from conftest import m


class TestVectorBasics:
    def test_zero_and_unit(self):
        z = ExpVector.zero(3)
        assert z.is_zero()
        assert z.arity == 3
        u = ExpVector.unit(3, 1, ExpPoly.X)
        assert u.coords == (ExpPoly.ZERO, ExpPoly.X, ExpPoly.ZERO)

    def test_deg_vector_and_support(self):
        v = m("y1^{x^2+1}*y3^2", 3)
        assert v.deg_vector() == (2, -1, 0)
        assert v.support_pattern() == (1, 0, 1)

    def test_indicator_flattens_weights(self):
        v = m("y1^{3*x^2+2}", 1)
        assert v.indicator() == m("y1^{x^2+1}", 1)

    def test_arity_mismatch_raises(self):
        with pytest.raises(ArityMismatchError):
            m("y1", 1).add(m("y1", 2))

    def test_immutability(self):
        v = m("y1", 1)
        with pytest.raises(AttributeError):
            v.coords = ()

    def test_scale_and_shift(self):
        v = m("y1^{x+1}*y2", 2)
        assert v.scale(2) == m("y1^{2*x+2}*y2^2", 2)
        assert v.shift() == m("y1^{x^2+x}*y2^{x}", 2)
        assert v.scale(0).is_zero()


class TestDividesShifted:
    def test_equal_monomials_shift_zero(self):
        u = m("y1^2*y2", 2)
        assert divides_shifted(u, u) == 0

    def test_least_shift_is_returned(self):
        u = m("y1", 1)
        assert divides_shifted(u, m("y1^{x^2+x}", 1)) == 1

    def test_shift_with_remainder(self):
        u = m("y1^2*y2", 2)
        v = m("y1^{2*x+1}*y2^{x+2}", 2)
        assert divides_shifted(u, v) == 1

    def test_none_when_no_shift_fits(self):
        assert divides_shifted(m("y1^2", 1), m("y1^{x}", 1)) is None
        assert divides_shifted(m("y1*y2", 2), m("y1^{x}", 2)) is None

    def test_zero_divides_everything_at_shift_zero(self):
        assert divides_shifted(ExpVector.zero(2), m("y1", 2)) == 0

    def test_degree_drop_rules_out(self):
        assert divides_shifted(m("y1^{x}", 1), m("y1^3", 1)) is None


class TestMinimalElements:
    def test_default_order_drops_dominated(self):
        vs = [m("y1", 1), m("y1^{x}", 1), m("y1^{x+1}", 1)]
        # y1 precedes both others, so it alone survives
        assert minimal_elements(vs) == [m("y1", 1)]

    def test_incomparable_elements_survive(self):
        vs = [m("y1^2", 2), m("y2^2", 2)]
        assert minimal_elements(vs) == sorted(vs, key=ExpVector.sort_key)

    def test_duplicates_collapse(self):
        vs = [m("y1", 1), m("y1", 1)]
        assert minimal_elements(vs) == [m("y1", 1)]

    def test_mutual_domination_keeps_one(self):
        # under "same support pattern" both dominate each other
        same = lambda a, b: a.support_pattern() == b.support_pattern()
        vs = [m("y1^2", 1), m("y1^{x}", 1)]
        kept = minimal_elements(vs, same)
        assert len(kept) == 1

    def test_empty(self):
        assert minimal_elements([]) == []


class TestSplits:
    def test_pairs_sum_back(self):
        u = m("y1^{x+2}*y2", 2)
        pairs = splits(u)
        # (2+1) * (1+1) * (1+1) ordered splits
        assert len(pairs) == 12
        for a, b in pairs:
            assert a.add(b) == u

    def test_split_of_zero(self):
        z = ExpVector.zero(1)
        assert splits(z) == [(z, z)]

    def test_cap(self):
        with pytest.raises(CapExceededError):
            splits(m("y1^9*y2^9*y3^9*y4^9*y5^9*y6^9", 6), cap=1000)


class TestCharVectors:
    def test_validate_accepts_minus_one(self):
        assert validate_char_vector([1, -1, 0], 3) == (1, -1, 0)

    def test_validate_rejects_bad_entries(self):
        with pytest.raises(ValueError):
            validate_char_vector([-2, 0], 2)
        with pytest.raises(ValueError):
            validate_char_vector([True, 0], 2)
        with pytest.raises(ArityMismatchError):
            validate_char_vector([0], 2)

    def test_pattern_monomial(self):
        assert pattern_monomial((1, -1, 0)) == m("y1^{x}*y3", 3)
        assert pattern_monomial((-1, -1)).is_zero()

    def test_char_leq(self):
        assert char_leq((-1, 0), (2, 1))
        assert char_leq((0, 0), (0, 0))
        assert not char_leq((1, 0), (0, 0))
        assert not char_leq((0, -1), (-1, -1))

    def test_char_leq_matches_pattern_membership(self):
        # the entrywise order mirrors radical-well-mixed divisibility
        from deltamon.ideals import ClosureKind, dominates

        grid = [(-1, 0), (0, -1), (0, 0), (1, 0), (0, 2), (2, 1)]
        for a in grid:
            for b in grid:
                assert char_leq(a, b) == dominates(
                    ClosureKind.RADICAL_WELL_MIXED,
                    pattern_monomial(a),
                    pattern_monomial(b),
                )
