"""Named series, vectors and Riordan pairs.

Catalan ``C(x) = 1 + x C(x)^2``, Motzkin ``M(x)``, central binomial
``W(x) = (1-4x)^(-1/2)``, the Fibonacci/Lucas vectors, and the catalog of
pairs: Pascal ``P``, ``Q``, ``D`` and the Fibonacci/Lucas matrices of the
first (``FF``, ``LF``) and second (``FS``, ``LS``) kinds.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from riordan.linalg import SeqVec
from riordan.pairs import Kind, RiordanPair, conj_by_D, rinv, rmul, sign_pair
from riordan.series import DEFAULT_ORDER, Series, compose


def catalan_number(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def motzkin_number(n: int) -> int:
    return sum(comb(n, 2 * k) * catalan_number(k) for k in range(n // 2 + 1))


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def lucas(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def catalan_series(n: int = DEFAULT_ORDER) -> Series:
    # convolution recurrence C_{k+1} = sum C_i C_{k-i}; the binomial formula is the cross-check
    c = [1]
    for k in range(n - 1):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return Series(c[:n], n)


def motzkin_series(n: int = DEFAULT_ORDER) -> Series:
    return Series([motzkin_number(k) for k in range(n)], n)


def central_binomial_series(n: int = DEFAULT_ORDER) -> Series:
    return Series([comb(2 * k, k) for k in range(n)], n)


def fibonacci_vec(n: int) -> SeqVec:
    return SeqVec(tuple(fibonacci(k) for k in range(n)))


def lucas_vec(n: int) -> SeqVec:
    return SeqVec(tuple(lucas(k) for k in range(n)))


def shift_vec(v: SeqVec) -> SeqVec:
    """The action of ``J(0)``: entry ``i`` becomes ``v[i+1]``; the window shrinks by one."""
    entries = v.entries[1:]
    if v.support is None:
        return SeqVec(entries)
    return SeqVec(entries, min(v.support - 1, len(entries) - 1) if v.support >= 1 else -1)


def euler_transform(f: Series) -> Series:
    """``T(f) = f(x/(1+x)) / (1+x)``."""
    n = f.order
    x = Series.x(n)
    return compose(f, x / (1 + x)) / (1 + x)


# ---------------------------------------------------------------------- pairs


def _x(order):
    return Series.x(order)


def pascal(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    return RiordanPair(1 / (1 - x), x / (1 - x))


def q_matrix(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    return RiordanPair((2 - x) / (1 - x), x / (1 - x))


def fibonacci_second(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    return RiordanPair(Series.const(1, order), x * (1 + x))


def lucas_second(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    return RiordanPair(1 + 2 * x, x * (1 + x))


def fibonacci_first(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    # g(0) = 0, so this is only semi-Riordan; column j starts at degree 2j+1
    return RiordanPair(x / (1 - x), x * x / (1 - x), Kind.SEMI)


def lucas_first(order: int = DEFAULT_ORDER) -> RiordanPair:
    x = _x(order)
    return RiordanPair((2 - x) / (1 - x), x * x / (1 - x), Kind.SEMI)


def catalan_bell(order: int = DEFAULT_ORDER) -> RiordanPair:
    """``((1 + xC)C, x(1 + xC)C)``, a pseudo-involution with first column 1, 2, 4, 10, 28, ..."""
    x = _x(order)
    c = catalan_series(order)
    g = (1 + x * c) * c
    return RiordanPair(g, x * g)


@lru_cache(maxsize=16)
def catalog(order: int = DEFAULT_ORDER) -> dict[str, RiordanPair]:
    """Named pairs at the given truncation order."""
    fs = fibonacci_second(order)
    ls = lucas_second(order)
    fs_inv = rinv(fs)
    ls_inv = rinv(ls)
    p = pascal(order)
    return {
        "P": p,
        "Q": q_matrix(order),
        "D": sign_pair(order),
        "PD": rmul(p, sign_pair(order)),
        "FS": fs,
        "LS": ls,
        "FF": fibonacci_first(order),
        "LF": lucas_first(order),
        "FSinv": fs_inv,
        "LSinv": ls_inv,
        "DFSinvD": conj_by_D(fs_inv),
        "DLSinvD": conj_by_D(ls_inv),
        "bell2C": catalan_bell(order),
    }


ALIASES = {"pascal": "P", "F": "FS", "fibonacci": "FS", "I": "identity"}


def named_pair(name: str, order: int = DEFAULT_ORDER) -> RiordanPair:
    name = ALIASES.get(name, name)
    if name == "identity":
        return RiordanPair(Series.const(1, order), Series.x(order))
    return catalog(order)[name]


__all__ = [
    "catalan_number",
    "motzkin_number",
    "fibonacci",
    "lucas",
    "catalan_series",
    "motzkin_series",
    "central_binomial_series",
    "fibonacci_vec",
    "lucas_vec",
    "shift_vec",
    "euler_transform",
    "pascal",
    "q_matrix",
    "fibonacci_second",
    "lucas_second",
    "fibonacci_first",
    "lucas_first",
    "catalan_bell",
    "catalog",
    "named_pair",
]
