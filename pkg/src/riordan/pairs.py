"""Riordan and semi-Riordan pairs and their group operations.

A pair ``(g, f)`` stands for the infinite lower-triangular matrix whose
column ``j`` has generating function ``g(x) f(x)^j``.  The product is
``(g, f)(h, l) = (g * h(f), l(f))`` and the inverse of a proper pair is
``(1/g(fbar), fbar)`` with ``fbar`` the compositional inverse of ``f``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from riordan.errors import (
    MismatchedF,
    NotProper,
    ResidualPole,
    RiordanError,
    UnknownTail,
    WindowTooSmall,
)
from riordan.linalg import SeqVec, TriMatrix
from riordan.series import Series, comp_inverse, compose


class Kind(enum.Enum):
    PROPER = "proper"
    SEMI = "semi"


@dataclass(frozen=True)
class RiordanPair:
    g: Series
    f: Series
    kind: Kind = field(default=None)

    def __post_init__(self):
        if self.f.order < 1 or self.f.valuation < 1:
            raise RiordanError("f must have a known zero constant term")
        proper = self.g.valuation == 0 and self.f.valuation == 1
        if self.kind is None:
            object.__setattr__(self, "kind", Kind.PROPER if proper else Kind.SEMI)
        elif self.kind is Kind.PROPER and not proper:
            raise NotProper("a proper pair needs g(0) != 0 and f'(0) != 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @property
    def proper(self) -> bool:
        return self.kind is Kind.PROPER

    def matrix(self, n: int) -> TriMatrix:
        return to_matrix(self, n)

    def __matmul__(self, other):
        if isinstance(other, RiordanPair):
            return rmul(self, other)
        if isinstance(other, SeqVec):
            return apply(self, other)
        return NotImplemented

    def mismatch(self, other: "RiordanPair", upto=None):
        """``None`` if both components agree on the common window, else ``(component, degree)``."""
        k = self.g.mismatch(other.g, upto)
        if k is not None:
            return ("g", k)
        k = self.f.mismatch(other.f, upto)
        if k is not None:
            return ("f", k)
        return None

    def agrees(self, other, upto=None) -> bool:
        return self.mismatch(other, upto) is None


def pair(g, f, kind=None) -> RiordanPair:
    return RiordanPair(g, f, kind)


def identity_pair(order: int) -> RiordanPair:
    return RiordanPair(Series.const(1, order), Series.x(order))


def sign_pair(order: int) -> RiordanPair:
    """D = (1, -x) = diag(1, -1, 1, ...)."""
    return RiordanPair(Series.const(1, order), -Series.x(order))


def to_matrix(p: RiordanPair, n: int) -> TriMatrix:
    """Leading ``n x n`` section: column ``j`` holds degrees ``0..n-1`` of ``g f^j``."""
    if p.g.valuation < 0:
        raise ResidualPole("a pair with a pole in g has no triangular realization")
    cols = []
    col = p.g
    for j in range(n):
        if col.order < n:
            raise WindowTooSmall(f"column {j} known only to degree {col.order - 1}, need {n - 1}")
        cols.append(col.coefficients(0, n))
        if j + 1 < n:
            col = col * p.f
    return TriMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


def rmul(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    kind = Kind.PROPER if a.proper and b.proper else Kind.SEMI
    return RiordanPair(a.g * compose(b.g, a.f), compose(b.f, a.f), kind)


def radd(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """Sum of two semi-Riordan matrices sharing the same ``f``."""
    k = a.f.mismatch(b.f)
    if k is not None:
        raise MismatchedF(f"f components differ at degree {k}")
    f = a.f if a.f.order <= b.f.order else b.f
    return RiordanPair(a.g + b.g, f, Kind.SEMI)


def rinv(a: RiordanPair) -> RiordanPair:
    if not a.proper:
        raise NotProper("only proper Riordan pairs are invertible")
    fbar = comp_inverse(a.f)
    return RiordanPair(1 / compose(a.g, fbar), fbar, Kind.PROPER)


def conj_by_D(a: RiordanPair) -> RiordanPair:
    """The pair of ``D a D``."""
    if not a.proper:
        raise NotProper("conjugation by D is defined here for proper pairs")
    d = sign_pair(a.order)
    return rmul(rmul(d, a), d)


def _check_identity(p: RiordanPair, n: int) -> bool:
    if p.order < n:
        raise WindowTooSmall(f"product known only to order {p.order}, need {n}")
    return p.agrees(identity_pair(n), n)


def is_involution(a: RiordanPair, n: int) -> bool:
    """``a^2 = (1, x)`` on the leading ``n x n`` section."""
    if not a.proper:
        raise NotProper("involution test needs a proper pair")
    return _check_identity(rmul(a, a), n)


def is_pseudo_involution(a: RiordanPair, n: int) -> bool:
    """``(a D)^2 = (1, x)`` on the leading ``n x n`` section."""
    if not a.proper:
        raise NotProper("pseudo-involution test needs a proper pair")
    ad = rmul(a, sign_pair(a.order))
    return _check_identity(rmul(ad, ad), n)


def vector_series(v: SeqVec, order=None) -> Series:
    """Generating function of ``v``; exact beyond the window when the support is known."""
    n = len(v)
    if v.support is not None and order is not None:
        n = max(n, order)
    return Series(v.entries, n)


def apply(p: RiordanPair, v: SeqVec) -> SeqVec:
    """Coefficients of ``g(x) V(f(x))`` where ``V`` is the generating function of ``v``."""
    V = vector_series(v, p.order)
    out = p.g * compose(V, p.f)
    if out.valuation < 0:
        raise ResidualPole(f"coefficient {out.coeff(-1)} left at degree -1")
    n = min(out.order, len(v))
    return SeqVec(tuple(out.coefficients(0, n)))


def transpose_apply(m: TriMatrix, v: SeqVec) -> SeqVec:
    """``m^T v`` on indices ``< m.n`` for a finitely supported ``v``.

    Each entry is a finite sum over the support of ``v``, which must sit
    inside the section so every contributing entry of ``m`` is present.
    """
    if v.support is None:
        raise UnknownTail("transposed action needs a finitely supported vector")
    if v.support >= m.n:
        raise WindowTooSmall(f"support degree {v.support} outside a {m.n}x{m.n} section")
    out = []
    for i in range(m.n):
        out.append(sum((m.rows[k][i] * v[k] for k in range(v.support + 1) if v[k]), 0))
    if m.lower:
        return SeqVec.finite(out)
    return SeqVec(tuple(out))
