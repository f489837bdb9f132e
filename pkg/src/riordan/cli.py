"""Command-line front end: ``riordan verify | show | eval | transform``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from riordan.errors import RiordanError
from riordan.expr import EVAL_SLACK, evaluate, parse_expr, parse_pair
from riordan.linalg import SeqVec, TriMatrix
from riordan.pairs import RiordanPair, apply, to_matrix
from riordan.series import DEFAULT_ORDER, to_rational
from riordan.special import ALIASES, catalog, named_pair
from riordan.suites import SUITES, run_suite


def default_order() -> int:
    raw = os.environ.get("RIORDAN_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"RIORDAN_ORDER must be an integer, got {raw!r}")
    if value < 1:
        raise SystemExit("RIORDAN_ORDER must be positive")
    return value


def _fmt(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------- matrices


def resolve_pair(text: str, order: int) -> RiordanPair:
    """A catalog name (or alias) or an explicit ``(g, f)`` pair of series expressions."""
    name = ALIASES.get(text, text)
    if name == "identity" or name in catalog(order):
        return named_pair(name, order)
    if text.lstrip().startswith("("):
        g, f = parse_pair(text)
        return RiordanPair(evaluate(g, order), evaluate(f, order))
    known = sorted(set(catalog(order)) | set(ALIASES))
    raise RiordanError(f"unknown matrix {text!r}; known names: {', '.join(known)}")


def render_matrix(m: TriMatrix, fmt: str) -> str:
    rows = [[_fmt(e) for e in r] for r in m.rows]
    if fmt == "csv":
        return "\n".join(",".join(r) for r in rows) + "\n"
    width = max((len(c) for r in rows for c in r), default=1)
    head = "| " + " | ".join(f"{j:>{width}}" for j in range(m.n)) + " |"
    rule = "|" + "|".join("-" * (width + 1) + ":" for _ in range(m.n)) + "|"
    body = ["| " + " | ".join(f"{c:>{width}}" for c in r) + " |" for r in rows]
    return "\n".join([head, rule, *body]) + "\n"


def show_matrix(text: str, n: int, fmt: str = "md") -> str:
    return render_matrix(to_matrix(resolve_pair(text, n + EVAL_SLACK), n), fmt)


# ---------------------------------------------------------------------- commands


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.order, args.seed)
    text = report.to_json(args.timings) if args.format == "json" else report.to_markdown(args.timings)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        counts = report.counts()
        print(f"{args.suite}: {counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def cmd_show(args) -> int:
    sys.stdout.write(show_matrix(args.matrix, args.order, args.format))
    return 0


def cmd_eval(args) -> int:
    s = evaluate(parse_expr(args.expr), args.order)
    doc = {
        "valuation": s.valuation if s.coeffs else None,
        "order": s.order,
        "coefficients": [_fmt(s.coeff(k)) for k in range(min(s.valuation, 0), s.order)],
        "start": min(s.valuation, 0),
    }
    print(json.dumps(doc, sort_keys=True))
    return 0


def read_vector(path: str) -> SeqVec:
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                entries.append(to_rational(line))
            except (ValueError, ZeroDivisionError):
                raise RiordanError(f"{path}:{lineno}: not an exact rational: {line!r}")
    return SeqVec(tuple(entries))


def cmd_transform(args) -> int:
    v = read_vector(args.vec)
    order = args.order or len(v)
    g, f = parse_expr(args.g), parse_expr(args.f)
    work = max(order, len(v)) + EVAL_SLACK
    pair = RiordanPair(evaluate(g, work), evaluate(f, work))
    out = apply(pair, v)
    for e in out.entries[:order]:
        print(_fmt(e))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="riordan", description="Exact Riordan-array computation and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)
    order = default_order()

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--order", type=int, default=order)
    v.add_argument("--seed", type=int, default=1)
    v.add_argument("--format", choices=("json", "md"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="include per-check elapsedMs (makes output run-dependent)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("show", help="print a leading section of a named matrix or a (g, f) pair")
    s.add_argument("--matrix", required=True)
    s.add_argument("--order", type=int, default=order)
    s.add_argument("--format", choices=("csv", "md"), default="md")
    s.set_defaults(func=cmd_show)

    e = sub.add_parser("eval", help="expand a series expression")
    e.add_argument("--expr", required=True)
    e.add_argument("--order", type=int, default=order)
    e.set_defaults(func=cmd_eval)

    t = sub.add_parser("transform", help="apply the pair (g, f) to a vector read from a file")
    t.add_argument("--g", required=True)
    t.add_argument("--f", required=True)
    t.add_argument("--vec", required=True, help="file with one exact rational per line")
    t.add_argument("--order", type=int, default=None, help="entries to print (default: vector length)")
    t.set_defaults(func=cmd_transform)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except RiordanError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
