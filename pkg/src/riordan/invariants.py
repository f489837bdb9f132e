"""Invariant sequences of Riordan (pseudo-)involutions and conjugators.

For an involution ``R`` put ``U = RD`` and ``V = DR``.  Then the columns of
``(U + D)^n`` are fixed by ``R`` and those of ``(U - D)^n`` are negated;
transposing, the columns of ``(V^T +- D)^n`` are fixed/negated by ``R^T``.
For a pseudo-involution the same holds with ``R`` in place of ``U`` (and of
``V^T``), eigen-relations then being taken for ``RD`` and ``R^T D``.

Everything here works on exact finite sections.  Leading sections of lower
triangular products are exact, and the columns of the upper-triangular
``(V^T +- D)^n`` are finitely supported, so each relation checked is a
statement about the infinite matrices restricted to a window.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from riordan.errors import (
    InvariantViolation,
    NonpositiveDiagonal,
    NotAppellForm,
    NotInvolution,
    NotMinusOneAppell,
    NotPseudoInvolution,
    NotProper,
)
from riordan.linalg import SeqVec, TriMatrix
from riordan.pairs import (
    RiordanPair,
    is_involution,
    is_pseudo_involution,
    rmul,
    sign_pair,
    to_matrix,
    transpose_apply,
)
from riordan.series import Series


class InvariantKind(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class InvariantCertificate:
    matrix_id: str
    vector: SeqVec
    kind: InvariantKind
    sign: int
    checked_order: int


def _sections(R: RiordanPair, size: int):
    return to_matrix(R, size), TriMatrix.sign_diag(size)


def _require(R, size, pseudo):
    if not R.proper:
        raise NotProper("invariant constructions need a proper Riordan pair")
    if pseudo:
        if not is_pseudo_involution(R, size):
            raise NotPseudoInvolution("(RD)^2 != I on the section")
    elif not is_involution(R, size):
        raise NotInvolution("R^2 != I on the section")


def eigen_operator(R: RiordanPair, size: int, kind: InvariantKind, pseudo=False) -> TriMatrix:
    """Section ``m`` such that the eigen-relation reads ``m v = +-v`` (first kind) or ``m^T v = +-v`` (second)."""
    Rm, Dm = _sections(R, size)
    if kind is InvariantKind.FIRST:
        return Rm @ Dm if pseudo else Rm
    # second kind: R^T D = (D R)^T, or R^T itself
    return Dm @ Rm if pseudo else Rm


def certify(R, vector, kind, sign, pseudo=False, matrix_id="R", size=None, operator=None):
    """Check ``vector`` against the eigen-relation and return a certificate.

    ``operator`` may carry a precomputed :func:`eigen_operator` section.
    Raises :class:`InvariantViolation` at the first index where it fails.
    """
    size = size or len(vector)
    m = operator if operator is not None else eigen_operator(R, size, kind, pseudo)
    if kind is InvariantKind.FIRST:
        image = m.apply(vector.truncate(size))
    else:
        image = transpose_apply(m, vector.truncate(size))
    n = min(len(image), len(vector), size)
    for i in range(n):
        if image[i] != sign * vector[i]:
            raise InvariantViolation(
                f"entry {i}: image {image[i]} != {sign} * {vector[i]}", index=i
            )
    return InvariantCertificate(matrix_id, vector, kind, sign, n)


def _generator(R, size, sign, pseudo, second):
    Rm, Dm = _sections(R, size)
    if second:
        base = Rm.transpose() if pseudo else (Dm @ Rm).transpose()
    else:
        base = Rm if pseudo else Rm @ Dm
    return base + Dm.scale(sign)


def build_first_kind(R: RiordanPair, n: int, sign: int = 1, pseudo=False, size=None) -> list[SeqVec]:
    """Columns of ``(U + sign D)^n`` (``(R + sign D)^n`` when ``pseudo``)."""
    size = size or R.order
    _require(R, size, pseudo)
    return (_generator(R, size, sign, pseudo, False) ** n).columns()


def build_second_kind(R: RiordanPair, n: int, sign: int = 1, pseudo=False, size=None) -> list[SeqVec]:
    """Columns of ``(V^T + sign D)^n`` (``(R^T + sign D)^n`` when ``pseudo``), finitely supported."""
    size = size or R.order
    _require(R, size, pseudo)
    m = _generator(R, size, sign, pseudo, True) ** n
    return [SeqVec.finite(c.entries) for c in m.columns()]


# ---------------------------------------------------------------------- conjugators


def _is_x(f: Series, sign=1):
    return f.agrees(Series.x(f.order) * sign)


def shift_by_identity(R: RiordanPair) -> RiordanPair:
    """``R + I`` as a pair; it is Riordan exactly when ``f = x``."""
    if not R.proper:
        raise NotProper("shift by identity needs a proper pair")
    if R.g.coeff(0) <= 0 or R.f.coeff(1) <= 0:
        raise NonpositiveDiagonal("main diagonal g0 * f1^j must be positive")
    if not _is_x(R.f):
        raise NotAppellForm("R + I is not a Riordan matrix unless f = x")
    return RiordanPair(R.g + 1, R.f)


def conjugator(R: RiordanPair, n: int) -> RiordanPair:
    """``((g + 1)^n, x)`` for an involution ``R = (g, -x)`` with ``g(0) > 0``."""
    if not R.proper or not _is_x(R.f, -1):
        raise NotMinusOneAppell("conjugator needs R = (g, -x)")
    if not is_involution(R, R.order):
        raise NotInvolution("R^2 != I on the window")
    if R.g.coeff(0) <= 0:
        raise NonpositiveDiagonal("diagonal of RD must be positive")
    b = R.g + 1
    return RiordanPair(b ** n, Series.x(R.order))


def interleaved_conjugator(R: RiordanPair, n: int, size: int, pseudo=False) -> TriMatrix:
    """Even columns of ``(U + D)^n`` next to odd columns of ``(U - D)^n``.

    With ``U = RD`` (or ``U = R`` when ``pseudo``) this matrix ``B`` satisfies
    ``U' B = B D`` where ``U'`` is ``R`` (or ``RD``), for every ``n``.
    """
    _require(R, size, pseudo)
    plus = (_generator(R, size, 1, pseudo, False) ** n).columns()
    minus = (_generator(R, size, -1, pseudo, False) ** n).columns()
    return TriMatrix.from_columns([plus[j] if j % 2 == 0 else minus[j] for j in range(size)])


def shifted_matrix(R: RiordanPair, size: int, pseudo=True) -> TriMatrix:
    """Dense section of ``R + I`` (pseudo-involution) or ``RD + I`` (involution)."""
    _require(R, size, pseudo)
    Rm, Dm = _sections(R, size)
    base = Rm if pseudo else Rm @ Dm
    if any(base[i, i] <= 0 for i in range(size)):
        raise NonpositiveDiagonal("diagonal entries must be positive")
    return base + TriMatrix.identity(size)


def pseudo_conjugator(R: RiordanPair, n: int, size: int, pseudo=True) -> TriMatrix:
    """``B^n`` with ``B`` the shifted matrix of ``R`` (pseudo-involution) or of ``RD`` (involution)."""
    base = R if pseudo else rmul(R, sign_pair(R.order))
    if base.proper and _is_x(base.f):
        _require(R, size, pseudo)
        b = to_matrix(shift_by_identity(base), size)
    else:
        b = shifted_matrix(R, size, pseudo)
    return b ** n


def conjugation_mismatch(R: RiordanPair, B: TriMatrix, pseudo=False):
    """First entry where ``R B != B D`` (``RD B != B D`` when ``pseudo``), else None.

    For an invertible ``B`` this is the statement ``R = B D B^-1``.
    """
    size = B.n
    Rm, Dm = _sections(R, size)
    lhs = (Rm @ Dm if pseudo else Rm) @ B
    rhs = B @ Dm
    for i in range(size):
        for j in range(size):
            if lhs[i, j] != rhs[i, j]:
                return (i, j, lhs[i, j], rhs[i, j])
    return None
