from math import comb

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from riordan.linalg import SeqVec
from riordan.pairs import apply, is_involution, is_pseudo_involution, to_matrix
from riordan.series import Series, sqrt
from riordan.special import (
    ALIASES,
    catalan_bell,
    catalan_number,
    catalan_series,
    catalog,
    central_binomial_series,
    euler_transform,
    fibonacci,
    fibonacci_vec,
    lucas,
    lucas_vec,
    motzkin_number,
    motzkin_series,
    named_pair,
    pascal,
    shift_vec,
)

N = 24
z = sp.symbols("z")


def taylor(expr, n):
    poly = sp.series(expr, z, 0, n).removeO()
    return [int(poly.coeff(z, k)) for k in range(n)]


def test_number_prefixes():
    assert [catalan_number(k) for k in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [motzkin_number(k) for k in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [fibonacci(k) for k in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]
    assert [lucas(k) for k in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]


def test_series_against_sympy():
    assert list(catalan_series(12).coefficients(0, 12)) == taylor((1 - sp.sqrt(1 - 4 * z)) / (2 * z), 12)
    assert list(motzkin_series(12).coefficients(0, 12)) == taylor((1 - z - sp.sqrt(1 - 2 * z - 3 * z**2)) / (2 * z**2), 12)
    assert list(central_binomial_series(12).coefficients(0, 12)) == taylor(1 / sp.sqrt(1 - 4 * z), 12)


def test_sequence_oracles():
    assert [catalan_number(n) for n in range(30)] == [int(sp.catalan(n)) for n in range(30)]
    assert [fibonacci(n) for n in range(40)] == [int(sp.fibonacci(n)) for n in range(40)]
    assert [lucas(n) for n in range(40)] == [int(sp.lucas(n)) for n in range(40)]


def test_motzkin_recurrence():
    # (n + 2) M_n = (2n + 1) M_{n-1} + 3(n - 1) M_{n-2}
    for n in range(2, 40):
        assert (n + 2) * motzkin_number(n) == (2 * n + 1) * motzkin_number(n - 1) + 3 * (n - 1) * motzkin_number(n - 2)


def test_euler_transform_of_catalan():
    x = Series.x(N)
    # C(x/(1+x)) = 1 + xM
    assert (euler_transform(catalan_series(N)) * (1 + x)).agrees(1 + x * motzkin_series(N))
    assert euler_transform(1 / (1 - x)).agrees(Series.const(1, N))


def test_central_binomial_is_inverse_sqrt():
    x = Series.x(N)
    assert (central_binomial_series(N) * sqrt(1 - 4 * x)).agrees(Series.const(1, N))


def test_shift_vec():
    assert list(shift_vec(fibonacci_vec(6))) == [1, 1, 2, 3, 5]
    assert shift_vec(SeqVec.unit(0, 5)).support == -1
    assert shift_vec(SeqVec.finite([1, 2, 3], 6)).support == 1


def test_catalog_contents():
    cat = catalog(N)
    assert set(cat) == {"P", "Q", "D", "PD", "FS", "LS", "FF", "LF", "FSinv", "LSinv", "DFSinvD", "DLSinvD", "bell2C"}
    assert all(p.proper for k, p in cat.items() if k not in ("FF", "LF"))
    assert not cat["FF"].proper and not cat["LF"].proper
    for alias, name in ALIASES.items():
        assert named_pair(alias, N).agrees(named_pair(name, N))


def test_pascal_entries_are_binomials():
    m = to_matrix(pascal(N), 12)
    assert all(m[i, j] == comb(i, j) for i in range(12) for j in range(i + 1))


def test_bell_first_column():
    assert list(to_matrix(catalan_bell(N), 8).column(0)) == [1, 2, 4, 10, 28, 84, 264, 858]


def test_pd_on_fibonacci_and_lucas():
    # sum (-1)^k binom(n, k) F_k = -F_n and sum (-1)^k binom(n, k) L_k = L_n
    pd = catalog(N)["PD"]
    f, l = fibonacci_vec(N), lucas_vec(N)
    assert list(apply(pd, f)) == [-e for e in f]
    assert list(apply(pd, l)) == list(l)
    for n in range(N):
        assert sum((-1) ** k * comb(n, k) * fibonacci(k) for k in range(n + 1)) == -fibonacci(n)
        assert sum((-1) ** k * comb(n, k) * lucas(k) for k in range(n + 1)) == lucas(n)


def test_lucas_first_kind_columns_fixed_by_pd():
    cat = catalog(N)
    lf = to_matrix(cat["LF"], 12)
    pd = to_matrix(cat["PD"], 12)
    assert pd @ lf == lf
    ff = to_matrix(cat["FF"], 12)
    assert pd @ ff == ff.scale(-1)


@given(st.integers(min_value=1, max_value=60))
def test_fibonacci_lucas_identity(n):
    assert lucas(n) == fibonacci(n - 1) + fibonacci(n + 1)


def test_involution_status_of_catalog():
    cat = catalog(N)
    pseudo = {k for k, p in cat.items() if p.proper and is_pseudo_involution(p, 16)}
    plain = {k for k, p in cat.items() if p.proper and is_involution(p, 16)}
    assert pseudo == {"P", "D", "bell2C"}
    assert plain == {"D", "PD"}
