"""Bilateral Lambert sums, Sbar, the g-functions, and their identities."""

from fractions import Fraction

import pytest

from overrank.errors import PoleHit, ZeroExponent
from overrank.lambert import (
    GFuncSpec,
    LambertSpec,
    check_constant,
    check_g1,
    check_g2,
    check_gees,
    check_short,
    check_sigma_shift,
    check_step,
    expand_geom,
    g_func,
    g_index,
    lambert_sum,
    s_bar,
    sigma,
    sigma_ab,
    sigma_primed,
    verify_lemma41,
    verify_lemma42,
    widened_summation,
)
from overrank.products import SignedMonomial as SM, _poch_raw
from overrank.series import LaurentSeries, first_mismatch, series_equal, substitute_power


class TestGeom:
    def test_positive(self):
        assert list(expand_geom(3, 10).terms()) == [(0, 1), (3, 1), (6, 1), (9, 1)]

    def test_negative(self):
        assert list(expand_geom(-2, 9).terms()) == [(2, -1), (4, -1), (6, -1), (8, -1)]

    def test_defining_property(self):
        e = -7
        prod = (LaurentSeries.one(60) - LaurentSeries.monomial(1, e, 60)) * expand_geom(e, 60)
        assert first_mismatch(prod, LaurentSeries.one(50)) is None

    def test_zero_exponent(self):
        with pytest.raises(ZeroExponent):
            expand_geom(0, 10)


class TestSigma:
    def test_constant_term(self):
        s = sigma(LambertSpec(SM(1, 1), SM(1, 0), 3), 10)
        # n = 0 contributes 1 + O(q), n = -1 contributes q^2 + O(q^4)
        assert s.coeff(0) == 1
        assert s.coeff(2) == 2

    def test_index_form_matches_generic(self):
        # Sum(2,0) for ell=5 equals the explicit base-q^5 bilateral sum
        lhs = sigma_ab(2, 0, 5, 60)
        rhs = sigma(LambertSpec(SM(1, 2), SM(1, 0), 5), 60)
        assert series_equal(lhs, rhs)

    def test_pole_detection(self):
        with pytest.raises(PoleHit):
            sigma(LambertSpec(SM(1, 5), SM(1, 0), 5), 30)
        with pytest.raises(PoleHit):
            sigma_ab(10, 2, 5, 30)

    def test_primed_requires_unit(self):
        with pytest.raises(ValueError):
            LambertSpec(SM(1, 1), SM(1, 0), 5, primed=True)

    def test_sigma_primed_low_order(self):
        # ell=5, b=2: the n = -1 and n = 1 terms set the low-order behavior
        s = sigma_primed(2, 5, 14)
        assert list(s.terms()) == [(3, 1), (8, 1), (12, -1), (13, 1)]

    def test_sigma_primed_empty(self):
        assert sigma_primed(2, 5, 0).is_zero()

    def test_negative_index_is_laurent(self):
        s = sigma_ab(-1, -4, 5, 20)
        assert s.min_exp >= 0  # this particular one happens to be a power series
        assert not s.is_zero()


class TestSbar:
    def test_product_form(self):
        for ell in (3, 5):
            lhs = s_bar(ell, ell, 200)
            ratio = _poch_raw(1, 1, 1, 200) / _poch_raw(-1, 1, 1, 200)
            rhs = ratio.scale(Fraction(-1, 2)) + LaurentSeries.monomial(Fraction(1, 2), 0, 200)
            assert series_equal(lhs, rhs), ell

    def test_reflection(self):
        for ell in (3, 5):
            for b in range(1, ell + 1):
                assert series_equal(s_bar(b, ell, 120), -s_bar(ell - b, ell, 120)), (ell, b)

    def test_power_series(self):
        for ell in (3, 5):
            for b in range(1, ell + 1):
                assert s_bar(b, ell, 60).min_exp >= 0


class TestShiftIdentities:
    def test_sigma_shift(self):
        assert check_sigma_shift(SM(1, 2), SM(1, 1), 5, 120).ok
        assert check_sigma_shift(SM(-1, 3), SM(-1, 2), 7, 120).ok

    def test_step(self):
        assert check_step(SM(1, 2), 7, 200).ok

    def test_short(self):
        assert check_short(SM(1, 2), 7, 120).ok
        assert check_short(SM(-1, 1), 5, 120).ok


class TestG:
    def test_g2(self):
        assert check_g2(1, 3, 150).ok
        assert check_g2(1, 5, 150).ok
        assert check_g2(2, 5, 150).ok

    def test_g1(self):
        assert check_g1(1, 5, 120).ok
        assert check_g1(2, 5, 120).ok
        assert check_g1(1, 3, 120).ok

    def test_constant(self):
        assert check_constant(SM(1, 1), 3, 150).ok

    def test_gees(self):
        assert check_gees(SM(1, 1), 5, 150).ok

    def test_part1(self):
        assert verify_lemma42("part1", SM(1, 1), 5, 150).ok
        assert verify_lemma42("part1", SM(1, 1), 3, 120).ok

    def test_part2(self):
        assert verify_lemma42("part2", SM(1, 2), 5, 120).ok

    def test_g_func_is_lift_of_index_form(self):
        g_y = g_index(1, 5, 20)
        g_q = g_func(GFuncSpec(1, 5), 100)
        assert series_equal(substitute_power(g_y, 5).truncate(100), g_q)

    def test_index_validation(self):
        with pytest.raises(ValueError):
            GFuncSpec(5, 5)


class TestLemma41:
    def test_named_instantiations(self):
        assert verify_lemma41(SM(1, 1), SM(1, 2), 5, 150).ok
        assert verify_lemma41(SM(1, 2), SM(1, 1), 5, 150).ok
        assert verify_lemma41(SM(-1, 1), SM(1, 1), 3, 100).ok

    def test_pole_rejected(self):
        # zeta = z puts the n = 0 denominator at zero (and P(1) = 0 downstream)
        with pytest.raises(PoleHit):
            verify_lemma41(SM(1, 1), SM(1, 1), 3, 40)


class TestRangeStability:
    def test_doubling_changes_nothing(self):
        cases = [
            lambda: sigma_ab(1, 0, 5, 80),
            lambda: sigma_ab(4, 4, 5, 80),
            lambda: sigma_ab(-1, -4, 5, 80),
            lambda: sigma_primed(-2, 3, 80),
            lambda: s_bar(1, 5, 80),
            lambda: s_bar(3, 3, 80),
            lambda: lambert_sum(1, 2, -1, [(-1, 0, 1), (1, 0, 5)], 80, primed=True),
        ]
        plain = [f() for f in cases]
        with widened_summation(40):
            widened = [f() for f in cases]
        for a, b in zip(plain, widened):
            assert series_equal(a, b)
