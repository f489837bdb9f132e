import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan.errors import NotProper
from riordan.linalg import SeqVec
from riordan.report import FAIL, PASS, SKIPPED, CheckList, run_check
from riordan.special import catalog
from riordan.pairs import to_matrix
from riordan.tables import DISPLAYS
from riordan.theorems import (
    SLACK,
    check_gf_relations,
    check_q2_transforms,
    closed_form_entry,
    coefficient_sum_identities,
    display_checks,
    factorization_checks,
    recurrence_checks,
    row_sum_checks,
)

ORDER = 16


def statuses(checks):
    return {c.check_id: c.status for c in checks}


@pytest.mark.parametrize(
    "kind,n,j,value",
    [("r", 3, 1, 2), ("r", 4, 4, 1), ("r", 4, 2, 5), ("r", 0, 0, 1), ("r", 3, 0, 0),
     ("q", 3, 3, 1), ("q", 3, 0, 20), ("q", 4, 1, 35), ("q", 4, 3, 5), ("q", 2, 5, 0)],
)
def test_closed_form_examples(kind, n, j, value):
    assert closed_form_entry(kind, n, j) == value


def test_closed_form_matches_dense_sections():
    cat = catalog(30)
    r, q = to_matrix(cat["DFSinvD"], 24), to_matrix(cat["DLSinvD"], 24)
    for n in range(24):
        for j in range(n + 1):
            assert closed_form_entry("r", n, j) == r[n, j]
            assert closed_form_entry("q", n, j) == q[n, j]


def test_closed_form_rejects_bad_arguments():
    with pytest.raises(ValueError):
        closed_form_entry("s", 1, 1)
    with pytest.raises(ValueError):
        closed_form_entry("r", -1, 0)


def test_coefficient_sums_pass():
    assert set(statuses(coefficient_sum_identities(30)).values()) == {PASS}


def test_coefficient_sums_skip_when_window_small():
    assert statuses(coefficient_sum_identities(1))["coefficient-sum-lucas"] == SKIPPED


def test_displays():
    checks = CheckList()
    display_checks(checks, ORDER)
    got = statuses(checks)
    assert len(got) == len(DISPLAYS)
    # the bell display carries a misprinted entry
    assert got.pop("display-bell-2c") == FAIL
    assert set(got.values()) == {PASS}


def test_bell_display_witness():
    checks = CheckList()
    display_checks(checks, ORDER, names=["bell2C"])
    (check,) = checks
    assert check.witness == {"label": "bell2C", "row": 5, "col": 2, "lhs": 86, "rhs": 96}


def test_structure_checks_pass():
    checks = CheckList()
    for fn in (recurrence_checks, row_sum_checks, factorization_checks):
        fn(checks, ORDER)
    assert set(statuses(checks).values()) == {PASS}


@pytest.mark.parametrize("v", [SeqVec.unit(0, ORDER + SLACK), SeqVec.finite([0] * 3, ORDER + SLACK), SeqVec(tuple(range(ORDER + SLACK)))])
def test_transforms_on_simple_vectors(v):
    checks = check_q2_transforms(v, ORDER, "t")
    check_gf_relations(v, ORDER, "t", checks)
    assert len(checks) == 14
    assert set(statuses(checks).values()) == {PASS}


@settings(max_examples=15)
@given(st.lists(st.integers(-9, 9), min_size=ORDER + SLACK, max_size=ORDER + SLACK))
def test_transforms_on_random_vectors(entries):
    checks = check_q2_transforms(SeqVec(tuple(entries)), ORDER, "h")
    check_gf_relations(SeqVec(tuple(entries)), ORDER, "h", checks)
    assert set(statuses(checks).values()) == {PASS}


def test_run_check_records_errors_and_skips():
    checks = CheckList()

    def boom(out):
        raise NotProper("nope")

    run_check(checks, "a", "anchor", boom)
    run_check(checks, "b", "anchor", lambda out: None, need=5, order=3)
    run_check(checks, "c", "anchor", lambda out: out.equal(1, 1))
    assert [c.status for c in checks] == [FAIL, SKIPPED, PASS]
    assert "NotProper" in checks[0].witness["error"]
    with pytest.raises(ValueError):
        run_check(checks, "c", "anchor", lambda out: None)
