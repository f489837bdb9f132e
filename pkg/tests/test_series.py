from fractions import Fraction
from math import comb

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals, series
from riordan.errors import (
    DoublePole,
    InexactWindow,
    NonformalComposition,
    NonSquareConstantTerm,
    NotInvertible,
    OutOfWindow,
)
from riordan.series import Series, add, coeff, comp_inverse, compose, div, mul, sqrt
from riordan.special import catalan_series, central_binomial_series

X = sp.Symbol("x")


def sympy_coeffs(expr, n):
    """Independent expansion with sympy."""
    poly = sp.series(expr, X, 0, n).removeO()
    return [Fraction(str(sp.Poly(poly, X).coeff_monomial(X**k))) for k in range(n)]


def brute_product(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


x = Series.x(16)
C = catalan_series(16)
W = central_binomial_series(16)


# ---------------------------------------------------------------- construction and window


def test_zero_series_has_valuation_at_order():
    z = Series([0, 0, 0], 3)
    assert z.is_zero() and z.valuation == 3 and z.coeff(2) == 0


def test_double_pole_rejected():
    with pytest.raises(DoublePole):
        Series([1], 4, -2)


def test_coeff_outside_window():
    assert coeff(x, 0) == 0
    with pytest.raises(OutOfWindow):
        coeff(x, 16)
    with pytest.raises(OutOfWindow):
        x.coeff(-2)


def test_coeff_examples():
    assert coeff(C, 4) == 14
    assert coeff(W, 3) == 20


# ---------------------------------------------------------------- add / mul


def test_add_examples():
    assert add(1 + x, -1 + x).agrees(2 * x)
    assert add(C, Series.zero(16)) == C
    assert add(1 + 2 * x, -2 * x).agrees(Series.const(1, 16))


def test_add_takes_smaller_order():
    assert add(Series([1, 1], 3), Series([1], 5)).order == 3


def test_mul_examples():
    assert mul(1 + x, 1 - x).agrees(1 - x * x)
    shifted = x * C * C
    assert shifted.coefficients(0, 6) == [0, 1, 2, 5, 14, 42]
    cs = C.coefficients()
    assert (x * C * C).coefficients(1, 16) == brute_product(cs, cs, 15)
    assert ((1 - 4 * x) * W * W).agrees(Series.const(1, 16))


def test_mul_window_of_shifted_factors():
    a = Series([1, 2, 3], 5, 2)  # known on [0, 5)
    b = Series([1, 1], 4)
    assert (a * b).order == min(2 + 4, 0 + 5)


def test_mul_double_pole():
    p = Series([1], 4, -1)
    with pytest.raises(DoublePole):
        p * p


# ---------------------------------------------------------------- division


def test_geometric_series():
    assert (1 / (1 - x)).coefficients() == [1] * 16


def test_central_binomial_from_catalan():
    assert div(Series.const(1, 16), 1 - 2 * x * C).coefficients(0, 5) == [1, 2, 6, 20, 70]


def test_laurent_quotient():
    q = (2 - 2 * x * C - x) / x
    assert q.valuation == -1 and q.coeff(-1) == 2
    # identity 1/C = 1 - xC gives (2 - xC)/(xC) = 2/(xC) - 1 = (2 - 2xC)/x - 1
    assert q.agrees((2 - x * C) / (x * C))


def test_division_by_unknown_zero():
    with pytest.raises(InexactWindow):
        div(Series.const(1, 4), Series.zero(4))


def test_division_double_pole():
    with pytest.raises(DoublePole):
        Series.const(1, 6) / (x * x).truncate(6)


# ---------------------------------------------------------------- composition


def test_compose_pascal_column():
    assert compose(1 / (1 - x), x / (1 - x)).coefficients(0, 8) == [1, 1, 2, 4, 8, 16, 32, 64]
    assert (x / (1 - x)).coefficients(0, 8) == [0] + [1] * 7


def test_euler_transform_gives_motzkin():
    t = compose((C - 1) / x, x / (1 + x)) / (1 + x)
    assert t.coefficients(0, 6) == [1, 1, 2, 4, 9, 21]


def test_compose_with_x_is_identity():
    assert compose(C, x).agrees(C)


def test_nonformal_composition():
    with pytest.raises(NonformalComposition):
        compose(C, 1 + x)


def test_pole_composition_window():
    p = Series([1, 1], 8, -1)  # 1/x + 1
    r = compose(p, x / (1 - x))
    assert r.agrees((1 - x) / x + 1, r.order)


@pytest.mark.parametrize("n", [4, 9])
def test_compose_against_sympy(n):
    got = compose(1 / (1 - 2 * Series.x(n)), Series.x(n) * (1 + Series.x(n)))
    assert got.coefficients() == sympy_coeffs(1 / (1 - 2 * X * (1 + X)), n)


# ---------------------------------------------------------------- inverse and sqrt


def test_comp_inverse_examples():
    fb = comp_inverse(x * (1 + x))
    assert fb.coefficients(0, 6) == [0, 1, -1, 2, -5, 14]
    assert comp_inverse(x).agrees(x)
    assert comp_inverse(x / (1 - x)).agrees(x / (1 + x))


def test_comp_inverse_matches_closed_form():
    fb = comp_inverse(x * (1 + x))
    assert fb.agrees((-1 + sqrt(1 + 4 * x)) / 2)


def test_comp_inverse_needs_linear_term():
    with pytest.raises(NotInvertible):
        comp_inverse(x * x)


def test_sqrt_examples():
    s = sqrt(1 - 4 * x)
    assert s.coefficients(0, 5) == [1, -2, -2, -4, -10]
    assert s.agrees(1 - 2 * x * C)
    assert sqrt(Series.const(1, 5)).agrees(Series.const(1, 5))
    r = sqrt(1 + 4 * x)
    assert r.coefficients(0, 4) == [1, 2, -2, 4]


def test_sqrt_of_rational_square():
    assert sqrt(Series([Fraction(9, 4), 3], 6)).coeff(0) == Fraction(3, 2)


@pytest.mark.parametrize("bad", [Series([2, 1], 4), Series([-1, 1], 4), Series([0, 1], 4)])
def test_sqrt_rejects(bad):
    with pytest.raises(NonSquareConstantTerm):
        sqrt(bad)


def test_catalan_against_sympy():
    assert C.coefficients() == sympy_coeffs((1 - sp.sqrt(1 - 4 * X)) / (2 * X), 16)
    assert C.coefficients() == [comb(2 * k, k) // (k + 1) for k in range(16)]


# ---------------------------------------------------------------- properties


@given(series(order=10), series(order=10), series(order=10))
def test_ring_laws(a, b, c):
    assert (a + b).agrees(b + a)
    assert (a * b).agrees(b * a)
    assert ((a + b) + c).agrees(a + (b + c))
    assert ((a * b) * c).agrees(a * (b * c))
    assert (a * (b + c)).agrees(a * b + a * c)


@given(series(order=10), series(order=10, unit=True))
def test_division_round_trip(a, b):
    assert (div(a, b) * b).agrees(a)


@given(series(order=8), series(order=8, valuation=1), series(order=8, valuation=1))
def test_composition_associative(a, b, c):
    assert compose(compose(a, b), c).agrees(compose(a, compose(b, c)))


@given(series(order=10, valuation=1).filter(lambda f: f.valuation == 1))
def test_comp_inverse_round_trip(f):
    fb = comp_inverse(f)
    xs = Series.x(10)
    assert compose(f, fb).agrees(xs)
    assert compose(fb, f).agrees(xs)


@given(st.lists(rationals, min_size=9, max_size=9), st.integers(min_value=1, max_value=5))
def test_sqrt_squares_back(tail, root0):
    a = Series([root0 * root0] + tail, 10)
    s = sqrt(a)
    assert (s * s).agrees(a) and s.coeff(0) > 0


@given(series(order=12), series(order=12))
def test_product_matches_brute_force(a, b):
    assert (a * b).coefficients(0, 12) == brute_product(a.coefficients(0, 12), b.coefficients(0, 12), 12)
