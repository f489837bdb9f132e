"""Dense exact matrices and vectors for finite sections of Riordan arrays."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from riordan.errors import RiordanError
from riordan.series import _scale, to_rational

_ZERO = Fraction(0)


@dataclass(frozen=True)
class SeqVec:
    """A finite window ``[0, len)`` of a vector in R^infinity.

    ``support`` is the largest index of a nonzero entry when the whole
    infinite vector is known to vanish beyond the window (``-1`` for the
    zero vector); ``None`` means the tail is unknown.
    """

    entries: tuple
    support: int | None = None

    def __post_init__(self):
        entries = tuple(to_rational(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.support is not None:
            nz = [i for i, e in enumerate(entries) if e]
            top = nz[-1] if nz else -1
            if self.support >= len(entries) or top > self.support:
                raise ValueError("support degree inconsistent with the entries")
            object.__setattr__(self, "support", top)

    @classmethod
    def finite(cls, entries, length=None):
        """Finitely supported vector, padded with zeros to ``length``."""
        entries = list(entries)
        if length is not None:
            entries += [0] * (length - len(entries))
        return cls(tuple(entries), len(entries) - 1)

    @classmethod
    def unit(cls, j, length):
        return cls.finite([1 if i == j else 0 for i in range(length)])

    @classmethod
    def ones(cls, length):
        return cls((1,) * length)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __neg__(self):
        return SeqVec(tuple(-e for e in self.entries), self.support)

    def __add__(self, other):
        n = min(len(self), len(other))
        support = None
        if self.support is not None and other.support is not None and max(self.support, other.support) < n:
            support = max(self.support, other.support)
        return SeqVec(tuple(a + b for a, b in zip(self.entries, other.entries)), support)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = to_rational(c)
        return SeqVec(tuple(c * e for e in self.entries), self.support)

    __rmul__ = __mul__

    def truncate(self, n):
        if n >= len(self):
            return self
        support = self.support if self.support is not None and self.support < n else None
        return SeqVec(self.entries[:n], support)

    def mismatch(self, other):
        """First index (on the common window) where the vectors differ, else None."""
        for i, (a, b) in enumerate(zip(self.entries, other.entries)):
            if a != b:
                return i
        return None

    def is_zero(self):
        return not any(self.entries)


class TriMatrix:
    """Dense ``n x n`` exact matrix; ``lower`` records exact lower-triangularity."""

    __slots__ = ("n", "rows", "lower")

    def __init__(self, rows):
        rows = tuple(tuple(to_rational(e) for e in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.n = n
        self.rows = rows
        self.lower = all(rows[i][j] == 0 for i in range(n) for j in range(i + 1, n))

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def sign_diag(cls, n):
        """The section of D = diag(1, -1, 1, ...)."""
        return cls.diag([(-1) ** i for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, TriMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"TriMatrix({[[str(e) for e in r] for r in self.rows]})"

    def column(self, j) -> SeqVec:
        return SeqVec(tuple(r[j] for r in self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.n)]

    def transpose(self) -> "TriMatrix":
        return TriMatrix(list(zip(*self.rows)))

    def leading(self, k) -> "TriMatrix":
        return TriMatrix([r[:k] for r in self.rows[:k]])

    def __add__(self, other):
        return TriMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return TriMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return TriMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c):
        c = to_rational(c)
        return TriMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, SeqVec):
            return self.apply(other)
        return TriMatrix(matmul(self.rows, other.rows))

    def __pow__(self, k):
        result = TriMatrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def apply(self, v: SeqVec) -> SeqVec:
        """``M v`` on the first ``n`` indices.

        Exact for lower-triangular sections; for other matrices the vector must
        be finitely supported inside the section.
        """
        n = min(self.n, len(v))
        if not self.lower and (v.support is None or v.support >= self.n):
            raise RiordanError("a non-triangular section needs a finitely supported vector")
        out = []
        for i in range(n):
            r = self.rows[i]
            out.append(sum((r[k] * v[k] for k in range(min(len(v), self.n)) if r[k] and v[k]), _ZERO))
        return SeqVec(tuple(out))


def matmul(a, b):
    """Exact product of two square row-lists, using integer arithmetic internally."""
    n = len(a)
    ia, da = _scale([e for r in a for e in r])
    ib, db = _scale([e for r in b for e in r])
    arows = [ia[i * n:(i + 1) * n] for i in range(n)]
    bcols = [[ib[k * n + j] for k in range(n)] for j in range(n)]
    den = da * db
    out = []
    for r in arows:
        nz = [(k, e) for k, e in enumerate(r) if e]
        row = []
        for c in bcols:
            s = 0
            for k, e in nz:
                s += e * c[k]
            row.append(Fraction(s, den))
        out.append(row)
    return out


def _bareiss_echelon(rows):
    """Fraction-free row echelon form; returns (integer rows, pivot columns)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                q, rem = divmod(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev)
                assert rem == 0, "Bareiss division must be exact"
                m[i][j] = q
            m[i][c] = 0
        prev = m[r][c]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(m: TriMatrix | list) -> int:
    rows = m.rows if isinstance(m, TriMatrix) else m
    if not rows:
        return 0
    flat, _ = _scale([to_rational(e) for r in rows for e in r])
    w = len(rows[0])
    ints = [flat[i * w:(i + 1) * w] for i in range(len(rows))]
    return len(_bareiss_echelon(ints)[1])


def nullspace(m: TriMatrix, shift=0) -> list[SeqVec]:
    """Exact basis of ``ker(m - shift*I)`` by Bareiss elimination.

    Each basis vector has a 1 in its free coordinate and zeros in the other
    free coordinates.
    """
    shift = to_rational(shift)
    n = m.n
    a = [[m.rows[i][j] - (shift if i == j else 0) for j in range(n)] for i in range(n)]
    flat, _ = _scale([e for r in a for e in r])
    ints = [flat[i * n:(i + 1) * n] for i in range(n)]
    ech, pivots = _bareiss_echelon(ints)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        sol = [_ZERO] * n
        sol[f] = Fraction(1)
        for row, pc in reversed(list(zip(ech, pivots))):
            s = sum((row[j] * sol[j] for j in range(pc + 1, n) if row[j]), _ZERO)
            sol[pc] = -s / row[pc]
        basis.append(SeqVec.finite(sol))
    return basis
