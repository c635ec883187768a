from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gfc.errors import NonzeroConstantTerm
from gfc.series import Poly, TruncSeries, poly_derivative, series_compose_outer, series_mul

from helpers import small_q

X = Poly.x()


def S(*coeffs, order):
    return TruncSeries(tuple(c if isinstance(c, Poly) else Poly.const(c) for c in coeffs), order)


class TestPoly:
    def test_trailing_zeros_trimmed(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly((0, 0)).degree == -1
        assert Poly() == Poly((0,))

    def test_arithmetic(self):
        p = Poly((1, 1))
        assert p * p == Poly((1, 2, 1))
        assert p - p == Poly()
        assert (p * Fraction(1, 2)).coeffs == (Fraction(1, 2), Fraction(1, 2))
        assert p.shift(2) == Poly((0, 0, 1, 1))
        assert p(Fraction(-1)) == 0

    def test_str(self):
        assert str(Poly((0, -3, 0, 1))) == "x^3 - 3*x"
        assert str(Poly((Fraction(-1, 2), 0, 1))) == "x^2 - 1/2"
        assert str(Poly()) == "0"


@pytest.mark.parametrize(
    "p, expected",
    [
        (Poly((0, -3, 0, 1)), Poly((-3, 0, 3))),
        (Poly.const(5), Poly()),
        (Poly(), Poly()),
    ],
)
def test_poly_derivative(p, expected):
    assert poly_derivative(p) == expected


class TestSeriesMul:
    def test_difference_of_squares(self):
        out = series_mul(S(1, 1, order=2), S(1, -1, order=2), 2)
        assert out == S(1, 0, -1, order=2)

    def test_xt_squared(self):
        out = series_mul(S(0, X, order=2), S(0, X, order=2), 2)
        assert out == S(0, 0, X * X, order=2)

    def test_identity(self):
        a = S(1, X, X * X, order=2)
        assert series_mul(a, S(1, order=2), 2) == a

    def test_order_guard(self):
        with pytest.raises(ValueError):
            series_mul(S(1, order=1), S(1, order=3), 2)


class TestComposeOuter:
    def test_exp_of_xt(self):
        out = series_compose_outer([1, 1, Fraction(1, 2), Fraction(1, 6)], S(0, X, order=2), 2)
        assert out == S(1, X, X * X * Fraction(1, 2), order=2)

    def test_linear_outer(self):
        out = series_compose_outer([1, 1, 0, 0], S(0, X, -1, order=2), 2)
        assert out == S(1, X, -1, order=2)

    def test_geometric(self):
        out = series_compose_outer([1, 1, 1, 1], S(0, 1, order=3), 3)
        assert out == S(1, 1, 1, 1, order=3)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(NonzeroConstantTerm):
            series_compose_outer([1, 1, 1], S(1, X, order=2), 2)


order_st = st.integers(min_value=0, max_value=4)


@st.composite
def series(draw, order):
    polys = [Poly(tuple(draw(st.lists(small_q, max_size=3)))) for _ in range(order + 1)]
    return TruncSeries(tuple(polys), order)


@st.composite
def series_triple(draw):
    n = draw(order_st)
    return n, draw(series(n)), draw(series(n)), draw(series(n))


@settings(max_examples=60, deadline=None)
@given(series_triple())
def test_ring_axioms(abc):
    n, a, b, c = abc
    assert series_mul(series_mul(a, b, n), c, n) == series_mul(a, series_mul(b, c, n), n)
    assert series_mul(a, b, n) == series_mul(b, a, n)
    assert series_mul(a, b + c, n) == series_mul(a, b, n) + series_mul(a, c, n)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_q, min_size=2, max_size=8))
def test_compose_with_t_returns_alpha(alpha):
    n = len(alpha) - 1
    out = series_compose_outer(alpha, S(0, 1, order=n), n)
    assert [out[k][0] for k in range(n + 1)] == [Fraction(a) for a in alpha]


@settings(max_examples=40, deadline=None)
@given(series_triple())
def test_results_in_lowest_terms(abc):
    n, a, b, _ = abc
    for p in series_mul(a, b, n).coeffs:
        for c in p.coeffs:
            assert c.denominator > 0
            assert gcd(c.numerator, c.denominator) == 1
