"""Truncated formal power series with exact rational coefficients.

A :class:`Series` knows its coefficients on the degrees ``valuation ..
order-1`` and nothing beyond: every operation propagates the provably exact
window, so a coefficient that is not known is never reported as zero.  A
one-term principal part (valuation -1) is allowed, which is all the Laurent
support the rest of the package needs.

    >>> x = Series.x(6)
    >>> (1 / (1 - x)).coefficients()
    [Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)]
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from numbers import Rational

from riordan.errors import (
    DoublePole,
    InexactWindow,
    NonformalComposition,
    NonSquareConstantTerm,
    NotInvertible,
    OutOfWindow,
)

DEFAULT_ORDER = 64

_ZERO = Fraction(0)
_ONE = Fraction(1)


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def _scale(seq):
    """Return integer numerators and a common denominator for ``seq``."""
    den = 1
    for c in seq:
        d = c.denominator
        if d != 1:
            den = den * d // math.gcd(den, d)
    if den == 1:
        return [c.numerator for c in seq], 1
    return [c.numerator * (den // c.denominator) for c in seq], den


def _convolve(a, b, n):
    """First ``n`` coefficients of the product of two dense lists starting at degree 0."""
    ia, da = _scale(a)
    ib, db = _scale(b)
    la, lb = len(ia), len(ib)
    out = []
    for d in range(n):
        lo = max(0, d - lb + 1)
        hi = min(d, la - 1)
        s = 0
        for i in range(lo, hi + 1):
            ai = ia[i]
            if ai:
                s += ai * ib[d - i]
        out.append(s)
    den = da * db
    if den == 1:
        return [Fraction(s) for s in out]
    return [Fraction(s, den) for s in out]


def _unit_inverse(b, n):
    """First ``n`` coefficients of 1/b for a dense list with ``b[0] != 0``."""
    ib, db = _scale(b)
    b0 = ib[0]
    # work with integers scaled by powers of b0 to keep the inner loop in int
    inv = [Fraction(db, b0)]
    if n <= 1:
        return inv[:n]
    nums = [1]  # inv[k] = nums[k] * db / b0**(k+1)
    for d in range(1, n):
        s = 0
        for i in range(1, min(d, len(ib) - 1) + 1):
            if ib[i]:
                s += ib[i] * nums[d - i] * b0 ** (i - 1)
        nums.append(-s)
    return [Fraction(nums[k] * db, b0 ** (k + 1)) for k in range(n)]


class Series:
    """Exact truncated Laurent/power series ``sum c_k x^k + O(x^order)``.

    ``coeffs[i]`` is the coefficient of ``x**(valuation + i)``.  After
    construction the stored leading coefficient is nonzero, or the series is
    zero on its whole window, in which case ``valuation == order`` and
    ``coeffs`` is empty.
    """

    __slots__ = ("valuation", "coeffs", "order")

    def __init__(self, coeffs=(), order=DEFAULT_ORDER, valuation=0):
        order = int(order)
        cs = [to_rational(c) for c in coeffs][: max(order - valuation, 0)]
        cs.extend([_ZERO] * (order - valuation - len(cs)))
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        if start == len(cs):
            valuation, cs = max(order, valuation), []
        else:
            valuation += start
            cs = cs[start:]
            if valuation < -1:
                raise DoublePole(f"valuation {valuation} < -1")
        self.valuation = valuation
        self.coeffs = tuple(cs)
        self.order = order

    # ------------------------------------------------------------------ constructors
    @classmethod
    def x(cls, order=DEFAULT_ORDER):
        return cls([1], order, 1)

    @classmethod
    def const(cls, c, order=DEFAULT_ORDER):
        return cls([c], order)

    @classmethod
    def zero(cls, order=DEFAULT_ORDER):
        return cls([], order)

    @classmethod
    def monomial(cls, c, k, order=DEFAULT_ORDER):
        return cls([c], order, k)

    @classmethod
    def from_function(cls, fn, order=DEFAULT_ORDER, start=0):
        """Series whose degree-``k`` coefficient is ``fn(k)``."""
        return cls([fn(k) for k in range(start, order)], order, start)

    # ------------------------------------------------------------------ access
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if not -1 <= k < self.order:
            raise OutOfWindow(f"degree {k} outside window [-1, {self.order})")
        if k < self.valuation:
            return _ZERO
        return self.coeffs[k - self.valuation]

    __getitem__ = coeff

    def coefficients(self, start=None, stop=None):
        """Known coefficients for degrees ``start .. stop-1`` (default: whole window from degree 0)."""
        if start is None:
            start = min(self.valuation, 0)
        if stop is None:
            stop = self.order
        if stop > self.order:
            raise OutOfWindow(f"degree {stop - 1} beyond order {self.order}")
        return [self.coeff(k) for k in range(start, stop)]

    def _dense(self, n):
        """Coefficients of degrees 0..n-1; requires valuation >= 0 and n <= order."""
        out = [_ZERO] * n
        v = self.valuation
        for i, c in enumerate(self.coeffs):
            d = v + i
            if d >= n:
                break
            out[d] = c
        return out

    def truncate(self, order: int) -> "Series":
        if order >= self.order:
            return self
        return Series(self.coeffs, order, self.valuation)

    # ------------------------------------------------------------------ comparison
    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (self.valuation, self.coeffs, self.order) == (other.valuation, other.coeffs, other.order)

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.order))

    def mismatch(self, other, upto=None):
        """First degree on the common window where the two series differ, else None."""
        if not isinstance(other, Series):
            other = Series.const(other, self.order)
        n = min(self.order, other.order)
        if upto is not None:
            n = min(n, upto)
        for k in range(min(self.valuation, other.valuation, 0), n):
            if self.coeff(k) != other.coeff(k):
                return k
        return None

    def agrees(self, other, upto=None) -> bool:
        return self.mismatch(other, upto) is None

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{self.valuation + i}")
        body = " + ".join(terms) if terms else "0"
        return f"Series({body} + O(x^{self.order}))"

    # ------------------------------------------------------------------ ring operations
    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.valuation)

    def __add__(self, other):
        if not isinstance(other, Series):
            other = to_rational(other)
            lo = min(self.valuation, 0)
            cs = [self.coeff(k) for k in range(lo, self.order)] if self.order > lo else []
            if self.order > 0:
                cs[-lo] += other
            return Series(cs, self.order, lo)
        n = min(self.order, other.order)
        lo = min(self.valuation, other.valuation, n)
        return Series([self.coeff(k) + other.coeff(k) for k in range(lo, n)], n, lo)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = to_rational(other)
            return Series([c * a for a in self.coeffs], self.order, self.valuation)
        va, vb = self.valuation, other.valuation
        if self.coeffs and other.coeffs and va + vb < -1:
            raise DoublePole(f"product valuation {va + vb} < -1")
        order = min(va + other.order, vb + self.order)
        v = va + vb
        n = order - v
        if n <= 0 or not self.coeffs or not other.coeffs:
            return Series([], order, min(v, order))
        return Series(_convolve(list(self.coeffs), list(other.coeffs), n), order, v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Series):
            c = to_rational(other)
            if c == 0:
                raise ZeroDivisionError("series divided by zero scalar")
            return Series([a / c for a in self.coeffs], self.order, self.valuation)
        return div(self, other)

    def __rtruediv__(self, other):
        return div(Series.const(other, max(self.order - self.valuation, 1)), self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if k == 0:
            return Series.const(1, max(self.order, 1))
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, inner):
        return compose(self, inner)

    def shift(self, k: int) -> "Series":
        """Multiply by ``x**k`` (exactly; the window moves with the series)."""
        return Series(self.coeffs, self.order + k, self.valuation + k)

    def subs_scale(self, c) -> "Series":
        """The series ``a(c*x)``."""
        c = to_rational(c)
        return Series([a * c ** (self.valuation + i) for i, a in enumerate(self.coeffs)], self.order, self.valuation)

    def derivative(self) -> "Series":
        lo = self.valuation
        if lo == -1:
            raise DoublePole("derivative of a Laurent series has a double pole")
        return Series([k * self.coeff(k) for k in range(max(lo, 1), self.order)], self.order - 1, max(lo, 1) - 1)


# ---------------------------------------------------------------------- module-level operations


def add(a: Series, b: Series) -> Series:
    return a + b


def mul(a: Series, b: Series) -> Series:
    return a * b


def coeff(a: Series, k: int) -> Fraction:
    return a.coeff(k)


def div(a: Series, b: Series) -> Series:
    """Quotient ``a / b`` on the window both operands determine."""
    if not isinstance(a, Series):
        a = Series.const(a, b.order)
    if not b.coeffs:
        raise InexactWindow("divisor has no known nonzero coefficient")
    va, vb = a.valuation, b.valuation
    v = va - vb
    precision = min(a.order - va, b.order - vb)
    if v < -1:
        raise DoublePole(f"quotient valuation {v} < -1")
    if precision <= 0 or not a.coeffs:
        return Series([], v + max(precision, 0), v)
    num = list(a.coeffs[:precision])
    inv = _unit_inverse(list(b.coeffs[:precision]), precision)
    return Series(_convolve(num, inv, precision), v + precision, v)


def reciprocal(b: Series) -> Series:
    return div(Series.const(1, max(b.order - b.valuation, 1)), b)


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner)`` truncated to the provably exact window.

    The inner series must have a known zero constant term; a one-term
    principal part in ``outer`` is allowed only when ``inner`` has valuation
    exactly one.
    """
    vi, ni = inner.valuation, inner.order
    if vi < 1 or ni < 1:
        raise NonformalComposition("inner series must have zero constant term")
    vo, no = outer.valuation, outer.order
    if vo == -1 and vi != 1:
        raise NonformalComposition("a pole can only be composed with a valuation-one series")
    order = no * vi
    first = next((k for k in range(max(vo, 1), no) if outer.coeff(k) != 0), None)
    if first is not None:
        order = min(order, (first - 1) * vi + ni)
    pole = outer.coeff(-1) if vo == -1 else _ZERO
    if pole:
        order = min(order, ni - 2)
    lo = -1 if pole else 0
    acc = [_ZERO] * max(order - lo, 0)
    if order <= lo:
        return Series([], order, lo)
    if order > 0 and vo <= 0 < no:
        acc[-lo] += outer.coeff(0)
    if first is not None and order > vi:
        base = inner._dense(min(order, ni))
        power = base
        k = 1
        while k * vi < order:
            a = outer.coeff(k) if k < no else _ZERO
            if a:
                for d in range(k * vi, order):
                    c = power[d] if d < len(power) else _ZERO
                    if c:
                        acc[d - lo] += a * c
            k += 1
            if k * vi >= order or k >= no:
                break
            power = _convolve(power, base, order)
    if pole:
        inv = reciprocal(inner)
        for d in range(-1, order):
            acc[d - lo] += pole * inv.coeff(d)
    return Series(acc, order, lo)


def comp_inverse(f: Series) -> Series:
    """Compositional inverse by degree-by-degree triangular back-substitution.

    Writes ``fbar = sum b_k x^k`` and solves ``sum_k b_k f(x)^k = x`` one
    degree at a time; the system is lower triangular with diagonal
    ``f1**k``.
    """
    if f.valuation != 1:
        raise NotInvertible("compositional inverse needs valuation exactly one")
    n = f.order
    f1 = f.coeff(1)
    base = f._dense(n)
    powers = [None, base]
    for k in range(2, n):
        powers.append(_convolve(powers[-1], base, n))
    b = [_ZERO] * n
    for d in range(1, n):
        rhs = _ONE if d == 1 else _ZERO
        s = sum((b[k] * powers[k][d] for k in range(1, d) if b[k]), _ZERO)
        b[d] = (rhs - s) / f1 ** d
    return Series(b, n)


def sqrt(a: Series) -> Series:
    """Square root with positive constant term; the constant term must be a rational square."""
    if a.valuation != 0:
        raise NonSquareConstantTerm("square root needs a nonzero constant term")
    a0 = a.coeff(0)
    if a0 < 0:
        raise NonSquareConstantTerm(f"constant term {a0} is negative")
    rn, rd = math.isqrt(a0.numerator), math.isqrt(a0.denominator)
    if rn * rn != a0.numerator or rd * rd != a0.denominator:
        raise NonSquareConstantTerm(f"constant term {a0} is not a rational square")
    n = a.order
    s = [Fraction(rn, rd)]
    two_s0 = 2 * s[0]
    for d in range(1, n):
        acc = a.coeff(d) - sum((s[i] * s[d - i] for i in range(1, d)), _ZERO)
        s.append(acc / two_s0)
    return Series(s, n)


def series_sum(items, order=DEFAULT_ORDER) -> Series:
    return reduce(lambda p, q: p + q, items, Series.zero(order))
