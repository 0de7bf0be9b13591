"""Exact scalars and truncated Laurent series."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhc.exactnum import (
    LaurentSeries,
    PoleError,
    Rat,
    SingularPartError,
    WindowError,
    eps,
    laurent_from_scalar,
    scalar_format,
    scalar_parse,
    take_limit,
)

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
).map(lambda f: Rat(f.numerator, f.denominator))


def series(valuation, coeffs, order=math.inf, level=1):
    return LaurentSeries(valuation, tuple(Rat(c) for c in coeffs), order, level)


small_series = st.builds(
    series,
    st.integers(min_value=-3, max_value=3),
    st.lists(rationals, min_size=1, max_size=4),
)


class TestScalarParsing:
    def test_parse_integer(self):
        assert scalar_parse("7") == Rat(7)

    def test_parse_fraction(self):
        assert scalar_parse("-3/4") == Rat(-3, 4)

    def test_format_roundtrip(self):
        for text in ("0", "5", "-5", "22/7", "-22/7"):
            assert scalar_format(scalar_parse(text)) == text

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            scalar_parse("1.5x")

    def test_rat_matches_fraction_arithmetic(self):
        a, b = Rat(22, 7), Rat(-3, 5)
        fa, fb = Fraction(22, 7), Fraction(-3, 5)
        got = a * b + a / b - b
        want = fa * fb + fa / fb - fb
        assert got == Rat(want.numerator, want.denominator)


class TestSeriesRing:
    @given(small_series, small_series)
    @settings(max_examples=60)
    def test_addition_commutes(self, s, t):
        assert s + t == t + s

    @given(small_series, small_series)
    @settings(max_examples=60)
    def test_multiplication_commutes(self, s, t):
        assert s * t == t * s

    @given(small_series, small_series, small_series)
    @settings(max_examples=60)
    def test_distributivity(self, s, t, u):
        assert s * (t + u) == s * t + s * u

    @given(small_series)
    @settings(max_examples=60)
    def test_additive_inverse(self, s):
        assert (s - s).is_zero()

    @given(small_series, rationals)
    @settings(max_examples=60)
    def test_scalar_coercion_matches_constant_series(self, s, c):
        assert s + c == s + laurent_from_scalar(c, window=8)

    def test_monomial_inverse_is_exact(self):
        m = series(3, [Rat(2)])
        inv = m.invert()
        assert inv.valuation == -3
        assert (m * inv) == laurent_from_scalar(Rat(1), window=8)
        assert inv.order == math.inf

    @given(small_series)
    @settings(max_examples=60)
    def test_unit_inverse_multiplies_to_one(self, s):
        if s.is_zero() or s.coeffs[0] == 0:
            return
        prod = s * s.invert()
        # equality is checked on the common reliable window
        assert prod == laurent_from_scalar(Rat(1), window=4)

    def test_division_by_zero_scalar_raises(self):
        with pytest.raises(PoleError):
            series(0, [1]) / Rat(0)


class TestEpsilonLimits:
    def test_simple_limit(self):
        v = Rat(5) + eps()
        assert take_limit(v * v) == Rat(25)

    def test_first_order_coefficient(self):
        v = (Rat(3) + eps()) * (Rat(2) + eps())
        # (3 + e)(2 + e) = 6 + 5e + e^2
        assert v.coeff(1) == Rat(5)

    def test_singular_part_detected(self):
        with pytest.raises(SingularPartError):
            take_limit(eps().invert())

    def test_residue_extraction(self):
        # 1/((x + e) - x) has residue 1 at e = 0
        x = Rat(7)
        expr = (x + eps() - x).invert()
        assert expr.coeff(-1) == Rat(1)

    def test_nested_levels_collapse_outer_first(self):
        inner, outer = eps(level=1), eps(level=2)
        expr = (Rat(2) + inner) + outer
        collapsed = take_limit(expr)
        assert take_limit(collapsed) == Rat(2)

    def test_window_exhaustion_raises(self):
        narrow = LaurentSeries(0, (), order=0)
        with pytest.raises(WindowError):
            take_limit(narrow)
