import pytest
import sympy as sp

from riordan.errors import (
    InvariantViolation,
    NonpositiveDiagonal,
    NotAppellForm,
    NotInvolution,
    NotMinusOneAppell,
    NotProper,
    NotPseudoInvolution,
)
from riordan.invariants import (
    InvariantKind,
    build_first_kind,
    build_second_kind,
    certify,
    conjugation_mismatch,
    conjugator,
    interleaved_conjugator,
    pseudo_conjugator,
    shift_by_identity,
)
from riordan.linalg import SeqVec
from riordan.pairs import RiordanPair, to_matrix
from riordan.series import Series
from riordan.special import catalan_bell, catalog, fibonacci_vec, lucas_vec, pascal

N = 24
SIZE = 12
x = Series.x(N)
EXAMPLE = RiordanPair((1 + x) / (1 - x), -x)
FIRST, SECOND = InvariantKind.FIRST, InvariantKind.SECOND


def sym(m):
    return sp.Matrix(m.n, m.n, lambda i, j: sp.Rational(m[i, j].numerator, m[i, j].denominator))


# ---------------------------------------------------------------- builders and certificates


@pytest.mark.parametrize("R,pseudo", [(EXAMPLE, False), (pascal(N), True), (catalan_bell(N), True)])
@pytest.mark.parametrize("sign", [1, -1])
def test_built_columns_certify(R, pseudo, sign):
    for kind, build in ((FIRST, build_first_kind), (SECOND, build_second_kind)):
        for col in build(R, 3, sign, pseudo, SIZE):
            cert = certify(R, col, kind, sign, pseudo, size=SIZE)
            assert cert.sign == sign and cert.checked_order == SIZE


def test_certify_reports_first_bad_index():
    with pytest.raises(InvariantViolation) as err:
        certify(pascal(N), fibonacci_vec(SIZE), FIRST, 1, pseudo=True)
    assert err.value.index == 1


def test_pascal_sign_on_fibonacci_and_lucas():
    P = pascal(N)
    assert certify(P, fibonacci_vec(SIZE), FIRST, -1, pseudo=True).checked_order == SIZE
    assert certify(P, lucas_vec(SIZE), FIRST, 1, pseudo=True).checked_order == SIZE


def test_builders_check_preconditions():
    with pytest.raises(NotInvolution):
        build_first_kind(pascal(N), 1, size=SIZE)
    with pytest.raises(NotPseudoInvolution):
        build_first_kind(EXAMPLE, 1, pseudo=True, size=SIZE)
    with pytest.raises(NotProper):
        build_second_kind(RiordanPair(x, x * x), 1, size=SIZE)


def test_built_columns_against_sympy_eigenvectors():
    # columns of (P + D)^1 and an independent sympy kernel of (PD - I) span the same space
    pd = to_matrix(pascal(N), 8) @ to_matrix(catalog(N)["D"], 8)
    cols = build_first_kind(pascal(N), 1, 1, True, 8)
    kernel = (sym(pd) - sp.eye(8)).nullspace()
    span = sp.Matrix.hstack(*kernel)
    ours = sp.Matrix([[sp.Rational(c[i]) for c in cols] for i in range(8)])
    assert span.rank() == ours.rank() == sp.Matrix.hstack(span, ours).rank() == 4


# ---------------------------------------------------------------- shift by identity


def test_shift_by_identity_appell():
    R = pascal(N)  # f = x/(1 - x), so P + I is not Riordan
    with pytest.raises(NotAppellForm):
        shift_by_identity(R)
    A = RiordanPair(1 / (1 - x), x)
    s = shift_by_identity(A)
    assert to_matrix(s, 6) == to_matrix(A, 6) + to_matrix(RiordanPair(Series.const(1, N), x), 6)


def test_shift_by_identity_errors():
    with pytest.raises(NotAppellForm):
        shift_by_identity(RiordanPair(Series.const(1, N), x / (1 - x)))
    with pytest.raises(NonpositiveDiagonal):
        shift_by_identity(RiordanPair(Series.const(-1, N), x))
    with pytest.raises(NotProper):
        shift_by_identity(RiordanPair(x, x * x))


def test_conjugator_errors():
    with pytest.raises(NotMinusOneAppell):
        conjugator(pascal(N), 1)
    with pytest.raises(NotInvolution):
        conjugator(RiordanPair(1 + x, -x), 1)
    with pytest.raises(NonpositiveDiagonal):
        conjugator(RiordanPair(-(1 + x) / (1 - x), -x), 1)


# ---------------------------------------------------------------- conjugation


def test_appell_conjugator_first_power():
    B = to_matrix(conjugator(EXAMPLE, 1), SIZE)
    assert conjugation_mismatch(EXAMPLE, B) is None


@pytest.mark.parametrize("n,lhs,rhs", [(2, 0, 8), (3, -8, 24), (4, -32, 64)])
def test_appell_conjugator_higher_powers_fail(n, lhs, rhs):
    # ((g + 1)^n, x) does not conjugate R to D once n >= 2
    B = to_matrix(conjugator(EXAMPLE, n), SIZE)
    assert conjugation_mismatch(EXAMPLE, B) == (1, 0, lhs, rhs)


def _section(expr, z, k, size=6):
    """Leading ``size`` x ``size`` block of the matrix whose column j is expr * k(z)^j."""
    cols = [sp.Poly(sp.series(expr * k**j, z, 0, size).removeO(), z) for j in range(size)]
    return sp.Matrix(size, size, lambda i, j: cols[j].coeff_monomial(z**i))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_appell_conjugator_failure_independent(n):
    z = sp.Symbol("z")
    g = (1 + z) / (1 - z)
    R = _section(g, z, -z)
    Dm = sp.diag(*[(-1) ** k for k in range(6)])
    B = _section((g + 1) ** n, z, z)
    assert R * B != B * Dm
    B1 = _section(g + 1, z, z)
    assert R * B1 == B1 * Dm


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_interleaved_conjugator_all_powers(n):
    B = interleaved_conjugator(EXAMPLE, n, SIZE)
    assert conjugation_mismatch(EXAMPLE, B) is None
    assert all(B[i, i] != 0 for i in range(SIZE))


@pytest.mark.parametrize("R", [pascal(N), catalan_bell(N)])
def test_pseudo_conjugator_first_power(R):
    assert conjugation_mismatch(R, pseudo_conjugator(R, 1, SIZE), pseudo=True) is None


@pytest.mark.parametrize("R,rhs", [(pascal(N), 4), (catalan_bell(N), 8)])
def test_pseudo_conjugator_square_fails(R, rhs):
    assert conjugation_mismatch(R, pseudo_conjugator(R, 2, SIZE), pseudo=True) == (1, 0, 0, rhs)


@pytest.mark.parametrize("R", [pascal(N), catalan_bell(N)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_interleaved_pseudo_conjugator(R, n):
    B = interleaved_conjugator(R, n, SIZE, pseudo=True)
    assert conjugation_mismatch(R, B, pseudo=True) is None


def test_bell_section_entry():
    # row 5, column 2 of ((1 + xC)C, x(1 + xC)C) is 86; sympy expansion as oracle
    z = sp.Symbol("z")
    C = (1 - sp.sqrt(1 - 4 * z)) / (2 * z)
    g = (1 + z * C) * C
    col2 = sp.series(g * (z * g) ** 2, z, 0, 7).removeO()
    assert col2.coeff(z, 5) == 86
    assert to_matrix(catalan_bell(N), 6)[5, 2] == 86


def test_vector_type():
    assert isinstance(build_second_kind(EXAMPLE, 1, 1, False, 6)[0], SeqVec)


def test_printed_bell_block_is_not_a_pseudo_involution():
    from riordan.linalg import TriMatrix
    from riordan.tables import BELL_2C

    rows = [r + [0] * (6 - len(r)) for r in BELL_2C]
    rd = TriMatrix(rows) @ TriMatrix.sign_diag(6)
    assert rd @ rd != TriMatrix.identity(6)
    rows[5][2] = 86
    rd = TriMatrix(rows) @ TriMatrix.sign_diag(6)
    assert rd @ rd == TriMatrix.identity(6)
