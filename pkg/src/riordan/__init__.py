"""Exact Riordan-array arithmetic and windowed identity verification."""

from riordan.errors import RiordanError
from riordan.expr import eval_expr, parse_expr
from riordan.linalg import SeqVec, TriMatrix, nullspace
from riordan.pairs import (
    Kind,
    RiordanPair,
    apply,
    conj_by_D,
    is_involution,
    is_pseudo_involution,
    radd,
    rinv,
    rmul,
    to_matrix,
    transpose_apply,
)
from riordan.series import Series, comp_inverse, compose, sqrt
from riordan.special import catalog, named_pair, pascal
from riordan.suites import run_suite

__version__ = "0.1.0"

__all__ = [
    "Kind",
    "RiordanError",
    "RiordanPair",
    "SeqVec",
    "Series",
    "TriMatrix",
    "apply",
    "catalog",
    "comp_inverse",
    "compose",
    "conj_by_D",
    "eval_expr",
    "is_involution",
    "is_pseudo_involution",
    "named_pair",
    "nullspace",
    "parse_expr",
    "pascal",
    "radd",
    "rinv",
    "rmul",
    "run_suite",
    "sqrt",
    "to_matrix",
    "transpose_apply",
]
