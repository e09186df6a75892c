import itertools

import pytest

from spacking.core import CirculantSpec, WidthSequence
from spacking.patterns import G3_WORD, chrom3_pattern
from spacking.solve import (
    FEASIBLE,
    INFEASIBLE,
    TIMEOUT,
    circulant_problem,
    ht_infeasible,
    least_infeasible_window,
    periodic_search,
    search,
    solve_circulant,
    window_infeasible,
)
from spacking.verify import PeriodicColoring, verify_periodic

from oracles import enumerate_colorable


def S(text):
    return WidthSequence.parse(text)


def test_circulant_examples():
    out = solve_circulant(CirculantSpec(25, (2, 3)), S("1,2*5"), minimize=7)
    assert out.optimum == 6 and out.lower.status == INFEASIBLE
    assert solve_circulant(CirculantSpec(14, (2, 5)), S("1,2*4"), k=5).status == FEASIBLE
    assert solve_circulant(CirculantSpec(14, (2, 5)), S("1,2*3"), k=4).status == INFEASIBLE


def test_window_examples():
    assert window_infeasible(5, S("1,1,2"), 3, 15).status == INFEASIBLE
    assert window_infeasible(3, S("1,2*4"), 5, 25).status == INFEASIBLE
    out = window_infeasible(7, S("1,1,1,1"), 4, 21)
    assert out.status == FEASIBLE


def test_window_feasible_when_pattern_restricts():
    # the 3-coloring pattern restricted to a window is a witness, so 3 colors work
    pat = chrom3_pattern(7)
    assert verify_periodic(pat.coloring, 7, pat.widths) is None
    assert window_infeasible(7, S("1,1,1"), 3, 21).status == FEASIBLE


def test_least_window_for_1122_lower_bound():
    for t in (3, 5, 7):
        W, out = least_infeasible_window(t, S("1,1,2"), 3, 1, 5 * t)
        assert W == 2 * t + 3
        assert out.status == INFEASIBLE


@pytest.mark.parametrize("t,status", [(5, INFEASIBLE), (13, INFEASIBLE), (11, FEASIBLE)])
def test_ht_examples(t, status):
    assert ht_infeasible(t).status == status


def test_periodic_examples():
    out = periodic_search(3, S("1,2*5"), 6, 25)
    assert out.status == FEASIBLE
    assert verify_periodic(out.witness, 3, S("1,2*5")) is None
    assert verify_periodic(PeriodicColoring.parse(G3_WORD), 3, S("1,2*5")) is None
    out = periodic_search(7, S("1,2*4"), 5, 6)
    assert out.status == FEASIBLE
    assert verify_periodic(out.witness, 7, S("1,2*4")) is None
    assert periodic_search(3, S("2*6"), 6, 6).status == INFEASIBLE


def test_periodic_search_exhausts_short_periods():
    # G_3 with (1,2,2,2,2,2): no valid word for small periods that the 25-word does not divide
    for p in (1, 2, 3, 4):
        assert periodic_search(3, S("1,2*5"), 6, p).status == INFEASIBLE


def _small_instances(nmax=12):
    seqs = [(1,), (2,), (1, 1), (1, 2), (2, 2), (1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 2, 2)]
    for n in range(3, nmax + 1):
        step_sets = {(2, t) for t in range(3, n, 2)} | {(1,), (2,), (1, 3)}
        for steps in sorted(step_sets):
            if max(steps) >= n:
                continue
            for widths in seqs:
                yield n, steps, widths


def test_solver_agrees_with_enumeration():
    checked = 0
    for n, steps, widths in _small_instances(10):
        out = solve_circulant(CirculantSpec(n, steps), WidthSequence(widths), k=len(widths))
        assert out.status != TIMEOUT
        assert (out.status == FEASIBLE) == enumerate_colorable(n, steps, widths), (n, steps, widths)
        checked += 1
    assert checked > 200


def test_monotone_in_k():
    for n, t in [(10, 3), (14, 5), (18, 7), (20, 3)]:
        seq = S("1,2*6")
        statuses = [solve_circulant(CirculantSpec(n, (2, t)), seq, k=k).status for k in range(1, 8)]
        first = statuses.index(FEASIBLE)
        assert all(s == INFEASIBLE for s in statuses[:first])
        assert all(s == FEASIBLE for s in statuses[first:])


def test_minimize_records_both_sides():
    out = solve_circulant(CirculantSpec(24, (2, 5)), S("2*7"), minimize=8)
    assert out.optimum == 6
    assert out.lower.k == 5 and out.lower.status == INFEASIBLE
    assert out.to_json()["lower"]["exhausted"] is True


def test_budget_is_a_timeout_not_infeasible():
    out = window_infeasible(15, S("1,2,2,2"), 4, 34, budget=1000)
    assert out.status == TIMEOUT
    assert "exhausted" not in out.to_json()


def test_symmetry_classes_follow_equal_widths():
    from spacking.solve import _color_classes

    cls, start = _color_classes([1, 2, 2, 3, 3, 3])
    assert cls == [0, 1, 1, 2, 2, 2]
    assert start == [0, 1, 1, 3, 3, 3]


def test_mixed_widths_are_not_merged():
    # C_8(1) with S=(1,2,2): opening a width-2 color first is legal and needed
    prob = circulant_problem(CirculantSpec(8, (1,)), S("1,2,2"))
    status, _, colors = search(prob)
    assert status == FEASIBLE
    assert enumerate_colorable(8, (1,), (1, 2, 2))


def test_thread_count_does_not_change_results():
    cases = [
        lambda th: solve_circulant(CirculantSpec(25, (2, 3)), S("1,2*5"), minimize=7, threads=th),
        lambda th: window_infeasible(11, S("1,2,2,2"), 4, 25, threads=th),
        lambda th: ht_infeasible(13, threads=th),
        lambda th: periodic_search(3, S("1,2*5"), 6, 25, threads=th),
    ]
    for make in cases:
        a, b = make(1).to_json(), make(4).to_json()
        assert a == b


def test_witnesses_are_deterministic():
    a = solve_circulant(CirculantSpec(28, (2, 5)), S("1,1,2,2"), k=4)
    b = solve_circulant(CirculantSpec(28, (2, 5)), S("1,1,2,2"), k=4)
    assert a.witness.colors() == b.witness.colors()


def test_never_feasible_and_infeasible_at_larger_k():
    for n, steps, widths in itertools.islice(_small_instances(), 0, None, 7):
        seq = WidthSequence(widths)
        spec = CirculantSpec(n, steps)
        feas = [solve_circulant(spec, seq, k=k).status == FEASIBLE for k in range(1, len(widths) + 1)]
        assert feas == sorted(feas)
