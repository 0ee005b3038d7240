import pytest

from isurg.graded import GradedDimZ2
from isurg.oracle import (
    ContradictionError,
    DimInterval,
    NotDeterminedError,
    build_system,
    explain,
    solve,
    solve_trefoil_family,
)
from isurg.surgery import dims_z2, trefoil_one_over_n


def test_dim_interval_invariants():
    assert DimInterval(2, 2).pinned()
    assert not DimInterval(0, None).pinned()
    with pytest.raises(ValueError):
        DimInterval(3, 2)
    with pytest.raises(ValueError):
        DimInterval(-1, 4)


def test_base_case_only():
    assert solve(1, 5, (5, 5)) == {5: GradedDimZ2(5, 0)}


def test_genus_one_matches_closed_form():
    r = solve(1, 5, (-10, 10))
    for n in range(-10, 11):
        assert r[n] == dims_z2(1, n)


def test_genus_two_matches_closed_form():
    r = solve(2, 7, (-10, 10))
    for n in range(-10, 11):
        assert r[n] == dims_z2(2, n)


@pytest.mark.parametrize("g", range(1, 7))
@pytest.mark.parametrize("m_offset", ["2g-1", "2g", "2g+5"])
def test_desk_scale_completeness(g, m_offset):
    m = {"2g-1": 2 * g - 1, "2g": 2 * g, "2g+5": 2 * g + 5}[m_offset]
    r = solve(g, m, (-30, 30))
    for n in range(-30, 31):
        assert r[n] == dims_z2(g, n)


def test_precondition_checks():
    with pytest.raises(ValueError):
        solve(2, 2, (-5, 5))  # m < 2g-1
    with pytest.raises(ValueError):
        solve(0, 5, (-5, 5))
    with pytest.raises(ValueError):
        solve(1, 5, (3, -3))
    with pytest.raises(ValueError):
        solve(1, 5, (0, 5), drop={"C9"})


def test_dropping_c6_leaves_negatives_open():
    with pytest.raises(NotDeterminedError) as exc:
        solve(1, 5, (-10, 10), drop={"C6"})
    assert any(s < 0 for s in exc.value.slopes)


@pytest.mark.parametrize("g", range(1, 7))
def test_dropping_c6_every_tested_pair(g):
    for m in (2 * g - 1, 2 * g, 2 * g + 5):
        with pytest.raises(NotDeterminedError) as exc:
            solve(g, m, (-30, 30), drop={"C6"})
        assert any(s < 0 for s in exc.value.slopes), (g, m)


@pytest.mark.parametrize("g", range(1, 7))
def test_dropping_c5_leaves_slopes_at_or_above_2g_minus_1_open(g):
    for m in (2 * g, 2 * g + 5):
        with pytest.raises(NotDeterminedError) as exc:
            solve(g, m, (-30, 30), drop={"C5"})
        assert any(s >= 2 * g - 1 for s in exc.value.slopes), (g, m)


def test_monotone_trace():
    # Bounds only ever tighten: lower bounds rise, upper bounds fall.
    system = build_system(1, 5, (-10, 10))
    system.solve()
    seen = {}
    for e in system.trace:
        key = (e.slope, e.grading, e.bound)
        if key in seen:
            if e.bound == "lo":
                assert e.value > seen[key]
            else:
                assert e.value < seen[key]
        seen[key] = e.value


def test_explain():
    system = build_system(1, 5, (-10, 10))
    system.solve()
    base_entries = explain(system, 5)
    assert base_entries
    assert {e.constraint for e in base_entries} == {"C1"}
    up = {e.constraint for e in explain(system, 6)}
    assert up & {"C4", "C5"}
    assert "C3" in up
    neg = {e.constraint for e in explain(system, -1)}
    assert "C6" in neg
    assert "C4" in neg
    with pytest.raises(ValueError):
        explain(system, 99)


def test_explain_requires_solve():
    system = build_system(1, 5, (-10, 10))
    with pytest.raises(ValueError):
        explain(system, 5)


def test_trefoil_family():
    assert solve_trefoil_family(1) == {1: GradedDimZ2(1, 0)}
    r = solve_trefoil_family(10)
    for n in range(1, 11):
        assert r[n] == GradedDimZ2(n, n - 1)
        assert r[n] == trefoil_one_over_n(n)


def test_trefoil_family_rejects_bad_input():
    with pytest.raises(ValueError):
        solve_trefoil_family(0)


def test_contradiction_carries_trace():
    # An impossible base (huge Stein bounds against a tiny L-space total)
    # cannot happen with valid inputs, so force one by shrinking the range
    # onto a manufactured clash: C6 vs a C4 chain from the base.
    system = build_system(1, 5, (-10, 10))
    system.bounds[-1][0] = DimInterval(0, 1)  # below the C6 bound of 3
    with pytest.raises(ContradictionError) as exc:
        system.solve()
    assert exc.value.system is system
    assert system.trace
