"""Windowed verification of the Catalan/Motzkin structure results.

Every function here appends :class:`~riordan.report.Check` records to a
check list.  Series are computed at ``order + SLACK`` and compared on the
first ``order`` coefficients, so the comparison window never touches the
truncation boundary of an intermediate result.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from riordan.linalg import SeqVec
from riordan.pairs import RiordanPair, apply, rmul, to_matrix
from riordan.report import CheckList, run_check
from riordan.series import Series, compose, sqrt
from riordan.special import (
    catalan_number,
    catalan_series,
    catalog,
    central_binomial_series,
    euler_transform,
    fibonacci,
    lucas,
    motzkin_series,
)
from riordan.tables import DISPLAYS

SLACK = 6
MIN_WINDOW = 4


@dataclass(frozen=True)
class Context:
    """Shared series at a working order, built once per verification order."""

    order: int
    work: int
    x: Series
    C: Series
    M: Series
    W: Series
    t: Series  # x C(x)
    s: Series  # x + x^2/(1-x) M(x/(1-x)), the Motzkin form of x C(x)


@lru_cache(maxsize=8)
def context(order: int) -> Context:
    work = order + SLACK
    x = Series.x(work)
    C = catalan_series(work)
    M = motzkin_series(work)
    u = x / (1 - x)
    s = x + x * x / (1 - x) * compose(M, u)
    return Context(order, work, x, C, M, central_binomial_series(work), x * C, s)


def _pairs_equal(out, a: RiordanPair, b: RiordanPair, need, label=None):
    return out.series(a.g, b.g, need, f"{label or ''}g") and out.series(a.f, b.f, need, f"{label or ''}f")


# ---------------------------------------------------------------------- displays


def display_checks(checks, order, names=None):
    """Compare computed leading sections with the transcribed reference displays."""
    cat = catalog(order + SLACK)
    for name, rows, cid in DISPLAYS:
        if names is not None and name not in names:
            continue

        def body(out, name=name, rows=rows):
            m = to_matrix(cat[name], len(rows))
            out.matrices(m.rows, rows, label=name)

        run_check(checks, cid, f"leading {len(rows)}x{len(rows)} section of {name} equals the published display", body, len(rows), order)


# ---------------------------------------------------------------------- recurrences


def _entry_sections(order):
    cat = catalog(order + SLACK)
    return to_matrix(cat["DFSinvD"], order), to_matrix(cat["DLSinvD"], order)


def recurrence_checks(checks, order):
    n = order

    def r_rec(out):
        r, _ = _entry_sections(n)
        out.equal(r[0, 0], 1, at="r00")
        for i in range(1, n):
            if not out.equal(r[i, 0], 0, at=f"r{i}0"):
                return
            if not out.equal(r[i, 1], Fraction(comb(2 * i - 2, i - 1), i), at=f"r{i}1"):
                return
            for j in range(2, n):
                if r[i, j] != -r[i - 1, j - 2] + r[i, j - 1]:
                    return out.fail(row=i, col=j, lhs=r[i, j], rhs=-r[i - 1, j - 2] + r[i, j - 1])

    def q_rec(out):
        _, q = _entry_sections(n)
        for i in range(n):
            if not out.equal(q[i, 0], comb(2 * i, i), at=f"q{i}0"):
                return
        for i in range(1, n):
            if not out.equal(q[i, 1], Fraction(comb(2 * i, i), 2), at=f"q{i}1"):
                return
            for j in range(2, n):
                if q[i, j] != -q[i - 1, j - 2] + q[i, j - 1]:
                    return out.fail(row=i, col=j, lhs=q[i, j], rhs=-q[i - 1, j - 2] + q[i, j - 1])

    def partial(which):
        def body(out):
            m = _entry_sections(n)[which]
            for i in range(1, n):
                if m[i, i] != m[i - 1, i - 1]:
                    return out.fail(row=i, col=i, lhs=m[i, i], rhs=m[i - 1, i - 1])
                for j in range(1, i + 1):
                    rhs = sum(m[i - 1, k] for k in range(i - j, i))
                    if m[i, i - j + 1] != rhs:
                        return out.fail(row=i, col=i - j + 1, lhs=m[i, i - j + 1], rhs=rhs)
        return body

    run_check(checks, "catalan-r-recurrence", "r_00=1, r_i0=0, r_i1=binom(2i-2,i-1)/i, r_ij=-r_{i-1,j-2}+r_{i,j-1}", r_rec, MIN_WINDOW, n)
    run_check(checks, "catalan-q-recurrence", "q_i0=binom(2i,i), q_i1=binom(2i,i)/2, q_ij=-q_{i-1,j-2}+q_{i,j-1}", q_rec, MIN_WINDOW, n)
    run_check(checks, "catalan-r-partial-sums", "r_ii=r_{i-1,i-1} and r_{i,i-j+1}=r_{i-1,i-1}+...+r_{i-1,i-j}", partial(0), MIN_WINDOW, n)
    run_check(checks, "catalan-q-partial-sums", "q_ii=q_{i-1,i-1} and q_{i,i-j+1}=q_{i-1,i-1}+...+q_{i-1,i-j}", partial(1), MIN_WINDOW, n)


def row_sum_checks(checks, order):
    n = order
    cat = catalog(n + SLACK)
    e = SeqVec.ones(n + SLACK)

    def r_sums(out):
        got = apply(cat["DFSinvD"], e)
        out.vectors(got, [catalan_number(k) for k in range(n)], n)

    def q_sums(out):
        got = apply(cat["DLSinvD"], e)
        out.vectors(got, [(2 * k + 1) * catalan_number(k) for k in range(n)], n)

    run_check(checks, "catalan-r-row-sums", "D FS^-1 D e = [C_0, C_1, C_2, ...]", r_sums, 1, n)
    run_check(checks, "catalan-q-row-sums", "D LS^-1 D e = [C_0, 3C_1, 5C_2, ..., (2n+1)C_n, ...]", q_sums, 1, n)


# ---------------------------------------------------------------------- closed forms


def _b(a, c):
    return comb(a, c) if c >= 0 and a >= c else 0


def closed_form_entry(kind: str, n: int, j: int) -> int:
    """Entry ``(n, j)`` of ``D FS^-1 D`` (``kind='r'``) or ``D LS^-1 D`` (``kind='q'``) as a signed Catalan sum."""
    if kind not in ("r", "q"):
        raise ValueError(f"kind must be 'r' or 'q', got {kind!r}")
    if n < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    C = catalan_number
    if j == 0:
        if kind == "r":
            return 1 if n == 0 else 0
        return (n + 1) * C(n)
    if n < j:
        return 0
    if kind == "r":
        return sum((-1) ** k * _b(j - 1 - k, k) * C(n - 1 - k) for k in range((j - 1) // 2 + 1))
    if j == 1:
        return (2 * n - 1) * C(n - 1)
    total = 0
    for k in range((j - 1) // 2 + 1):
        tail = _b(j - 2 - k, k - 1)
        total += (-1) ** k * ((n - 1 - k) * (_b(j - 1 - k, k) + tail) + tail) * C(n - 1 - k)
    return total


def closed_form_checks(checks, order):
    n = order

    def grid(which, kind):
        def body(out):
            m = _entry_sections(n)[which]
            for i in range(n):
                for j in range(i + 1):
                    v = closed_form_entry(kind, i, j)
                    if m[i, j] != v:
                        return out.fail(row=i, col=j, lhs=m[i, j], rhs=v)
        return body

    run_check(checks, "catalan-r-closed-form", "r_nj = sum_k (-1)^k binom(j-1-k,k) C_{n-1-k}", grid(0, "r"), 2, n)
    run_check(checks, "catalan-q-closed-form", "q_nj = sum_k (-1)^k [(n-1-k)(binom(j-1-k,k)+binom(j-2-k,k-1)) + binom(j-2-k,k-1)] C_{n-1-k}", grid(1, "q"), 2, n)


def coefficient_sum_identities(j_max: int, checks=None) -> CheckList:
    """The binomial coefficient sums of the closed forms reproduce ``F_j``, ``L_{j-1}`` and ``F_{j-2}``."""
    checks = CheckList() if checks is None else checks

    def fib(out):
        for j in range(1, j_max + 1):
            s = sum(_b(j - 1 - k, k) for k in range((j - 1) // 2 + 1))
            if not out.equal(s, fibonacci(j), j=j):
                return

    def luc(out):
        for j in range(2, j_max + 1):
            s = sum(_b(j - 1 - k, k) + _b(j - 2 - k, k - 1) for k in range((j - 1) // 2 + 1))
            if not out.equal(s, lucas(j - 1), j=j):
                return

    def fib2(out):
        for j in range(3, j_max + 1):
            s = sum(_b(j - 2 - k, k - 1) for k in range(1, (j - 1) // 2 + 1))
            if not out.equal(s, fibonacci(j - 2), j=j):
                return

    run_check(checks, "coefficient-sum-fibonacci", "sum_k binom(j-1-k,k) = F_j for j >= 1", fib, 1, j_max)
    run_check(checks, "coefficient-sum-lucas", "sum_k [binom(j-1-k,k)+binom(j-2-k,k-1)] = L_{j-1} for j >= 2", luc, 2, j_max)
    run_check(checks, "coefficient-sum-fibonacci-shifted", "sum_{k>=1} binom(j-2-k,k-1) = F_{j-2} for j >= 3", fib2, 3, j_max)
    return checks


# ---------------------------------------------------------------------- factorizations


def factorization_checks(checks, order):
    n = order
    ctx = context(n)
    x, C, M, W, t = ctx.x, ctx.C, ctx.M, ctx.W, ctx.t
    cat = catalog(ctx.work)
    P = cat["P"]
    one = Series.const(1, ctx.work)
    root = sqrt(1 - 4 * x)
    inner = RiordanPair((M - x * M - x * x * M * M) / (1 + x), (x + x * x * M) / (1 + x))

    def add(cid, anchor, body, need=MIN_WINDOW):
        run_check(checks, cid, anchor, body, need, n)

    def series_eq(lhs, rhs, label=None):
        return lambda out: out.series(lhs, rhs, n, label)

    def pair_eq(lhs, rhs):
        return lambda out: _pairs_equal(out, lhs, rhs, n)

    add("catalan-binomial", "C(x) from C_{k+1}=sum C_i C_{k-i} has C_n = binom(2n,n)/(n+1)",
        series_eq(C, Series([catalan_number(k) for k in range(ctx.work)], ctx.work)))
    add("catalan-functional-equation", "C = 1 + x C^2", series_eq(C, 1 + x * C * C))
    add("catalan-closed-form", "2x C(x) = 1 - sqrt(1-4x)", series_eq(2 * t, 1 - root))
    add("sqrt-identity", "sqrt(1-4x) = 1 - 2x C(x)", series_eq(root, 1 - 2 * t))
    add("central-binomial", "W(x) = 1/(1 - 2x C(x)) = (1-4x)^(-1/2)",
        lambda out: out.series(W, 1 / (1 - 2 * t), n, "W vs 1/(1-2xC)") and out.series(W * root, one, n, "W sqrt(1-4x)"))
    add("motzkin-closed-form", "2x^2 M(x) = 1 - x - sqrt((1-x)^2 - 4x^2)",
        series_eq(2 * x * x * M, 1 - x - sqrt((1 - x) ** 2 - 4 * x * x)))
    # M is built from the binomial-Catalan sum; the functional equation is an independent route
    add("motzkin-functional-equation", "M_n = sum_k binom(n,2k) C_k satisfies M = 1 + xM + x^2 M^2", series_eq(M, 1 + x * M + x * x * M * M))
    add("euler-transform-catalan", "T((C-1)/x) = M with T(f) = f(x/(1+x))/(1+x)", series_eq(euler_transform((C - 1) / x), M))
    add("catalan-at-euler-point", "C(x/(1+x)) = 1 + x M(x)", series_eq(compose(C, x / (1 + x)), 1 + x * M))
    add("catalan-reciprocal-shift", "x/(C-1) = 1 - x - x C", series_eq(x / (C - 1), 1 - x - t))
    add("catalan-via-motzkin", "C(x) = 1 + x/(1-x) M(x/(1-x))", series_eq(C, 1 + x / (1 - x) * compose(M, x / (1 - x))))
    add("catalan-motzkin-pairs", "(1/(1+x), x/(1+x)) ((C-1)/x, x) = (M, x/(1+x))",
        pair_eq(rmul(RiordanPair(1 / (1 + x), x / (1 + x)), RiordanPair((C - 1) / x, x)), RiordanPair(M, x / (1 + x))))
    add("pascal-inverse", "P (1/(1+x), x/(1+x)) = (1, x)", pair_eq(rmul(P, RiordanPair(1 / (1 + x), x / (1 + x))), RiordanPair(one, x)))
    add("catalan-shift-inverse", "((C-1)/x, x) (x/(C-1), xC) = (1, xC)",
        pair_eq(rmul(RiordanPair((C - 1) / x, x), RiordanPair(x / (C - 1), t)), RiordanPair(one, t)))
    add("fibonacci-inverse-conjugate", "D FS^-1 D = (1, xC) = (1, (1 - sqrt(1-4x))/2)",
        lambda out: _pairs_equal(out, cat["DFSinvD"], RiordanPair(one, t), n, "xC:")
        and _pairs_equal(out, cat["DFSinvD"], RiordanPair(one, (1 - root) / 2), n, "sqrt:"))
    add("lucas-inverse-conjugate", "D LS^-1 D = (1/(1-2xC), xC) = (1/sqrt(1-4x), (1 - sqrt(1-4x))/2)",
        lambda out: _pairs_equal(out, cat["DLSinvD"], RiordanPair(1 / (1 - 2 * t), t), n, "xC:")
        and _pairs_equal(out, cat["DLSinvD"], RiordanPair(1 / root, (1 - root) / 2), n, "sqrt:"))
    add("fibonacci-inverse-pascal-factorization", "(1, xC) = P ((M - xM - x^2 M^2)/(1+x), (x + x^2 M)/(1+x))",
        pair_eq(rmul(P, inner), RiordanPair(one, t)))
    add("lucas-inverse-pascal-factorization", "D LS^-1 D = (W, x) P ((M - xM - x^2 M^2)/(1+x), (x + x^2 M)/(1+x))",
        pair_eq(rmul(rmul(RiordanPair(W, x), P), inner), cat["DLSinvD"]))

    def triple(out):
        target = cat["DLSinvD"]
        d = cat["DFSinvD"]
        forms = [
            ("(1/(1-2xC), x) D FS^-1 D", rmul(RiordanPair(1 / (1 - 2 * t), x), d)),
            ("(W, x) D FS^-1 D", rmul(RiordanPair(W, x), d)),
            ("D FS^-1 D (1/(1-2x), x)", rmul(d, RiordanPair(1 / (1 - 2 * x), x))),
        ]
        for label, p in forms:
            if not _pairs_equal(out, p, target, n, label + ": "):
                return

    add("lucas-inverse-triple-factorization", "D LS^-1 D = (1/(1-2xC), x) D FS^-1 D = (W, x) D FS^-1 D = D FS^-1 D (1/(1-2x), x)", triple)


# ---------------------------------------------------------------------- transforms


def _gf(v: SeqVec, order):
    # an unknown tail must not be padded with zeros
    return Series(v.entries, len(v)) if v.support is None else Series(v.entries, max(order, len(v)))


def _vec_checks(checks, cid, anchor, body, order):
    run_check(checks, cid, anchor, body, MIN_WINDOW, order)


def check_q2_transforms(v: SeqVec, order: int, label: str, checks=None) -> CheckList:
    """The eight conversions between Fibonacci/Lucas images of ``v`` through ``D FS^-1 D`` and ``D LS^-1 D``.

    ``v`` should carry at least ``order + SLACK`` entries (or be finitely
    supported); comparisons use the first ``order`` entries.
    """
    checks = CheckList() if checks is None else checks
    ctx = context(order)
    t = ctx.t
    cat = catalog(ctx.work)
    d_f, d_l = cat["DFSinvD"], cat["DLSinvD"]
    w = apply(cat["FF"], v)
    xv = apply(cat["LF"], v)
    y = apply(cat["FS"], v)
    z = apply(cat["LS"], v)

    def side(g, src, matrix, dst):
        def body(out):
            lhs = apply(RiordanPair(g, t), src)
            rhs = apply(matrix, dst)
            out.vectors(lhs, rhs, order)
        return body

    items = [
        ("ff-to-catalan-r", "((2 - xC)/(xC), xC) w = D FS^-1 D x   (w = FF v, x = LF v)", (2 - t) / t, w, d_f, xv),
        ("ff-to-catalan-q", "((2 - xC)/(xC - 2x^2C^2), xC) w = D LS^-1 D x", (2 - t) / (t - 2 * t * t), w, d_l, xv),
        ("lf-to-catalan-r", "(xC/(2 - xC), xC) x = D FS^-1 D w", t / (2 - t), xv, d_f, w),
        ("lf-to-catalan-q", "(xC/((1 - 2xC)(2 - xC)), xC) x = D LS^-1 D w", t / ((1 - 2 * t) * (2 - t)), xv, d_l, w),
        ("ls-to-catalan-r", "(1/(1 + 2xC), xC) z = D FS^-1 D y   (y = FS v, z = LS v)", 1 / (1 + 2 * t), z, d_f, y),
        ("ls-to-catalan-q", "(1/(1 - 4x^2C^2), xC) z = D LS^-1 D y", 1 / (1 - 4 * t * t), z, d_l, y),
        ("fs-to-catalan-r", "(1 + 2xC, xC) y = D FS^-1 D z", 1 + 2 * t, y, d_f, z),
        ("fs-to-catalan-q", "((1 + 2xC)/(1 - 2xC), xC) y = D LS^-1 D z", (1 + 2 * t) / (1 - 2 * t), y, d_l, z),
    ]
    for cid, anchor, g, src, matrix, dst in items:
        _vec_checks(checks, f"{cid}[{label}]", anchor, side(g, src, matrix, dst), order)
    return checks


def check_gf_relations(v: SeqVec, order: int, label: str, checks=None) -> CheckList:
    """Generating-function relations between the Fibonacci and Lucas images of ``v``."""
    checks = CheckList() if checks is None else checks
    ctx = context(order)
    x, t, s = ctx.x, ctx.t, ctx.s
    cat = catalog(ctx.work)
    g = _gf(apply(cat["LF"], v), ctx.work)
    h = _gf(apply(cat["FF"], v), ctx.work)
    hv = _gf(apply(cat["FS"], v), ctx.work)
    hmv = _gf(apply(cat["LS"], v), ctx.work)
    u = -x / (1 - x)

    def pascal_fixed(out):
        out.series(compose(g, u) / (1 - x), g, order)

    def pascal_negated(out):
        out.series(compose(h, u) / (1 - x), -h, order)

    def lucas_to_fibonacci(out):
        k = x / (2 - x) * g
        out.series(k, h, order, "x/(2-x) g vs GF(FF v)") and out.series(compose(k, u) / (1 - x), -k, order, "negated by PD")

    def fibonacci_to_lucas(out):
        k = (2 - x) / x * h
        out.series(k, g, order, "(2-x)/x h vs GF(LF v)") and out.series(compose(k, u) / (1 - x), k, order, "fixed by PD")

    def second_kind_catalan(out):
        out.series(compose(hv, t), compose(hmv, t) / (1 + 2 * t), order)

    def second_kind_motzkin(out):
        out.series(s, t, order, "substitution equals xC") and out.series(
            compose(hmv, s), (1 + 2 * x + 2 * x * x / (1 - x) * compose(ctx.M, x / (1 - x))) * compose(hv, s), order
        )

    items = [
        ("lucas-first-kind-gf-fixed", "g = GF(LF v) satisfies g(-x/(1-x))/(1-x) = g", pascal_fixed),
        ("fibonacci-first-kind-gf-negated", "h = GF(FF v) satisfies h(-x/(1-x))/(1-x) = -h", pascal_negated),
        ("invariant-to-inverse-gf", "g invariant => x/(2-x) g is inverse invariant (and equals GF(FF v))", lucas_to_fibonacci),
        ("inverse-to-invariant-gf", "h inverse invariant => (2-x)/x h is invariant (and equals GF(LF v))", fibonacci_to_lucas),
        ("second-kind-gf-catalan", "h_v(xC) = h_-v(xC)/(1 + 2xC), h_v = GF(FS v), h_-v = GF(LS v)", second_kind_catalan),
        ("second-kind-gf-motzkin", "h_-v(s) = (1 + 2x + 2x^2/(1-x) M(x/(1-x))) h_v(s), s = x + x^2/(1-x) M(x/(1-x))", second_kind_motzkin),
    ]
    for cid, anchor, body in items:
        _vec_checks(checks, f"{cid}[{label}]", anchor, body, order)
    return checks


def first_kind_relation_checks(checks, order):
    """The semi-Riordan factorizations linking the first- and second-kind matrices."""
    ctx = context(order)
    x = ctx.x
    cat = catalog(ctx.work)

    def ff(out):
        _pairs_equal(out, rmul(RiordanPair(x / (2 - x), x), cat["LF"]), cat["FF"], order)

    def ls(out):
        _pairs_equal(out, rmul(RiordanPair(1 + 2 * x, x), cat["FS"]), cat["LS"], order)

    run_check(checks, "fibonacci-first-from-lucas-first", "FF = (x/(2-x), x) LF", ff, MIN_WINDOW, order)
    run_check(checks, "lucas-second-from-fibonacci-second", "LS = (1 + 2x, x) FS", ls, MIN_WINDOW, order)
