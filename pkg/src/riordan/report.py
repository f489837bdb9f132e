"""Check records, suite reports and the comparison helpers that produce them."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from riordan.errors import RiordanError

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _s(value):
    return str(value)


@dataclass
class Check:
    check_id: str
    anchor: str
    status: str
    witness: dict | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self):
        return self.status == PASS

    def to_dict(self, timings=False):
        d = {"checkId": self.check_id, "anchor": self.anchor, "status": self.status, "witness": self.witness}
        if timings:
            d["elapsedMs"] = round(self.elapsed_ms, 3)
        return d


@dataclass
class SuiteReport:
    suite_id: str
    order: int
    seed: int
    checks: list = field(default_factory=list)

    @property
    def failed(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self):
        return not self.failed

    def counts(self):
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self, timings=False) -> str:
        doc = {
            "suiteId": self.suite_id,
            "order": self.order,
            "seed": self.seed,
            "summary": self.counts(),
            "checks": [c.to_dict(timings) for c in self.checks],
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_markdown(self, timings=False) -> str:
        counts = self.counts()
        lines = [
            f"# Suite `{self.suite_id}` (order {self.order}, seed {self.seed})",
            "",
            f"{counts[PASS]} passed, {counts[FAIL]} failed, {counts[SKIPPED]} skipped",
            "",
            "| check | status | statement | witness |" + (" ms |" if timings else ""),
            "|---|---|---|---|" + ("---|" if timings else ""),
        ]
        for c in self.checks:
            w = "" if c.witness is None else json.dumps(c.witness, sort_keys=True)
            row = f"| {c.check_id} | {c.status} | {c.anchor} | {w} |"
            if timings:
                row += f" {c.elapsed_ms:.1f} |"
            lines.append(row.replace("\n", " "))
        return "\n".join(lines) + "\n"


class CheckList(list):
    """Collects checks and enforces that every id appears once."""

    def add(self, check: Check):
        if any(c.check_id == check.check_id for c in self):
            raise ValueError(f"duplicate check id {check.check_id}")
        self.append(check)
        return check


def run_check(checks, check_id, anchor, body, need=0, order=None):
    """Run ``body(outcome)`` and record the verdict under ``check_id``.

    A check needing a window of ``need`` is skipped when ``order < need``.
    Package errors raised by the body are recorded as failures.
    """
    out = Outcome()
    t0 = time.perf_counter()
    if order is not None and order < need:
        out.skip(f"needs order >= {need}")
    else:
        try:
            body(out)
        except RiordanError as exc:
            out.fail(error=f"{type(exc).__name__}: {exc}")
    elapsed = (time.perf_counter() - t0) * 1000
    return checks.add(Check(check_id, anchor, out.status, out.witness, elapsed))


class Outcome:
    def __init__(self):
        self.status = PASS
        self.witness = None

    def fail(self, **witness):
        if self.status != FAIL:
            self.status = FAIL
            self.witness = {k: _jsonable(v) for k, v in witness.items()}

    def skip(self, reason):
        self.status = SKIPPED
        self.witness = {"reason": reason}

    # comparison helpers -------------------------------------------------

    def series(self, lhs, rhs, need, label=None):
        """Compare two series on degrees < need; fail with the first differing degree."""
        window = min(lhs.order, rhs.order)
        if window < need:
            self.fail(label=label, reason=f"window {window} smaller than {need}")
            return False
        k = lhs.mismatch(rhs, need)
        if k is not None:
            self.fail(label=label, degree=k, lhs=lhs.coeff(k), rhs=rhs.coeff(k))
            return False
        return True

    def vectors(self, lhs, rhs, need, label=None):
        window = min(len(lhs), len(rhs))
        if window < need:
            self.fail(label=label, reason=f"window {window} smaller than {need}")
            return False
        for i in range(need):
            if lhs[i] != rhs[i]:
                self.fail(label=label, index=i, lhs=lhs[i], rhs=rhs[i])
                return False
        return True

    def matrices(self, lhs, rhs, label=None):
        """Entrywise comparison of row-lists; ``rhs`` may be ragged (printed triangles)."""
        for i, row in enumerate(rhs):
            for j, r in enumerate(row):
                a = lhs[i][j]
                if a != r:
                    self.fail(label=label, row=i, col=j, lhs=a, rhs=r)
                    return False
        return True

    def equal(self, lhs, rhs, **where):
        if lhs != rhs:
            self.fail(lhs=lhs, rhs=rhs, **where)
            return False
        return True

    def truth(self, value, **witness):
        if not value:
            self.fail(**witness)
        return bool(value)


def _jsonable(v):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(e) for e in v]
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else _s(v)
    return _s(v)
