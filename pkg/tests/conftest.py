import sys

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from riordan.pairs import RiordanPair
from riordan.series import Series

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-6, max_value=6)
nonzero_ints = small_ints.filter(bool)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=4))


@st.composite
def series(draw, order=None, valuation=0, unit=False, coeff=rationals):
    n = draw(st.integers(min_value=2, max_value=12)) if order is None else order
    cs = draw(st.lists(coeff, min_size=n - valuation, max_size=n - valuation))
    if unit:
        cs[0] = draw(nonzero_ints)
    return Series(cs, n, valuation)


@st.composite
def proper_pairs(draw, order=10):
    g = draw(st.lists(small_ints, min_size=order, max_size=order))
    g[0] = draw(nonzero_ints)
    f = draw(st.lists(small_ints, min_size=order - 1, max_size=order - 1))
    f[0] = draw(nonzero_ints)
    return RiordanPair(Series(g, order), Series(f, order, 1))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(mod.TITLES):
        items = mod.RESULTS.get(criterion)
        if not items:
            terminalreporter.write_line(f"NOT RUN criterion {criterion}: {mod.TITLES[criterion]}")
            continue
        bad = [f"{item} ({detail})" for item, ok, detail in items if not ok]
        verdict = "FAIL" if bad else "PASS"
        line = f"{verdict} criterion {criterion}: {mod.TITLES[criterion]}"
        if bad:
            line += " -- failing: " + "; ".join(bad)
        terminalreporter.write_line(line)
