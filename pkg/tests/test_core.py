import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spacking.core import (
    CirculantSpec,
    DistanceOracle,
    DistanceSpec,
    WidthSequence,
    build_ht,
    conflict_offsets,
    dist_circulant,
    dist_delta,
    ht_embedding,
)

from oracles import circulant_distances, naive_distance, step_combination_distance

ODD_T = st.sampled_from([3, 5, 7, 9, 11, 13])


def test_distance_examples():
    assert dist_delta(5, 2) == 1
    assert dist_delta(3, 1) == 2
    assert dist_delta(5, 14) == 4
    # 14 = 2*2 + 2*5 by exhausting step combinations
    assert step_combination_distance(5, 14) == 4


def test_distance_matches_step_combinations():
    for t in (3, 5, 7, 9, 11, 13):
        for g in range(-60, 61):
            assert dist_delta(t, g) == step_combination_distance(t, g)


def test_canonical_spec_rejects_even_and_small():
    for bad in (1, 2, 4, 10, -3):
        with pytest.raises(ValueError):
            DistanceSpec.canonical(bad)
    with pytest.raises(ValueError):
        DistanceSpec.canonical(10**6 + 1)
    assert DistanceSpec.canonical(7).generators == (2, 7)


def test_general_spec_escape_hatch():
    even = DistanceOracle(DistanceSpec.general([2, 4]))
    assert even.distance(6) == 2
    assert even.distance(3) == math.inf
    three = DistanceOracle(DistanceSpec.general([2, 3, 7]))
    assert three.distance(1) == 2


def test_upper_bound_is_constructive():
    oracle = DistanceOracle(DistanceSpec.canonical(7))
    for g in range(-50, 51):
        assert oracle.distance(g) <= oracle.upper_bound(g)


@given(ODD_T, st.integers(-300, 300))
def test_symmetry(t, g):
    assert dist_delta(t, g) == dist_delta(t, -g)


@given(ODD_T, st.integers(-100, 100), st.integers(-100, 100))
def test_triangle_inequality(t, a, b):
    assert dist_delta(t, a + b) <= dist_delta(t, a) + dist_delta(t, b)


@given(ODD_T, st.integers(-400, 400))
def test_generator_lower_bound(t, g):
    assert dist_delta(t, g) >= math.ceil(abs(g) / t)


@given(ODD_T, st.integers(1, 6))
def test_offsets_are_exactly_the_close_gaps(t, width):
    offs = conflict_offsets(t, width)
    assert offs <= set(range(1, width * t + 1))
    for g in range(1, width * t + 1):
        assert (g in offs) == (dist_delta(t, g) <= width)


def test_offsets_examples():
    assert conflict_offsets(5, 2) == {2, 3, 4, 5, 7, 10}
    assert conflict_offsets(7, 2) == {2, 4, 5, 7, 9, 14}
    assert conflict_offsets(9, 1) == {2, 9}
    assert conflict_offsets(13, 2) == {2, 4, 11, 13, 15, 26}


def test_fresh_oracle_agrees_with_naive_bfs():
    oracle = DistanceOracle(DistanceSpec.canonical(11))
    for g in range(200, -201, -1):
        assert oracle.distance(g) == naive_distance(11, g)


def test_width_sequence_parsing():
    assert WidthSequence.parse("1,1,2,2").widths == (1, 1, 2, 2)
    assert WidthSequence.parse("2*5").widths == (2,) * 5
    assert WidthSequence.parse("1,2*4").widths == (1, 2, 2, 2, 2)
    assert WidthSequence.parse("1,2").prefix(4).widths == (1, 2, 2, 2)
    with pytest.raises(ValueError):
        WidthSequence.parse("2,1")
    with pytest.raises(ValueError):
        WidthSequence.parse("0,1")


@pytest.mark.parametrize(
    "n,steps,u,v,expected",
    [(14, (2, 5), 0, 2, 1), (14, (2, 5), 0, 7, 2), (25, (2, 3), 0, 1, 2)],
)
def test_circulant_distance_examples(n, steps, u, v, expected):
    assert dist_circulant(CirculantSpec(n, steps), u, v) == expected


def test_circulant_distance_against_floyd_warshall():
    for n, steps in [(10, (2, 3)), (12, (2, 5)), (9, (2, 7)), (8, (2, 4))]:
        spec = CirculantSpec(n, steps)
        ref = circulant_distances(n, steps)
        for u in range(n):
            for v in range(n):
                assert dist_circulant(spec, u, v) == ref[u][v]


def test_disconnected_circulant_reports_unreachable():
    spec = CirculantSpec(12, (2, 4))
    assert not spec.connected
    assert dist_circulant(spec, 0, 1) == math.inf
    assert CirculantSpec(14, (2, 5)).connected


def test_ht_examples():
    h = build_ht(5)
    assert len(h.vertices) == 20
    assert h.embedding[(2, 1)] == 13 and h.embedding[(4, 5)] == 15
    assert h.embedding[(1, 1)] == 8 and h.embedding[(2, 1)] == 13


@pytest.mark.parametrize("t", [5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25])
def test_ht_embedding_is_a_subgraph(t):
    h = build_ht(t)
    assert len(h.vertices) == 4 * t
    assert len(h.edges) == 3 * t + 4 * (t - 1) + 1
    assert len(set(h.embedding.values())) == 4 * t
    for a, b in h.edges:
        assert abs(h.embedding[a] - h.embedding[b]) in (2, t)
    table = h.distances()
    for a in h.vertices[::3]:
        for b in h.vertices:
            assert dist_delta(t, h.embedding[a] - h.embedding[b]) <= table[a][b]


def test_ht_rejects_bad_t():
    for bad in (3, 4, 6):
        with pytest.raises(ValueError):
            build_ht(bad)


def test_ht_embedding_formula():
    assert ht_embedding(7, 4, 7) == 21
    assert ht_embedding(7, 2, 1) == 19


@settings(max_examples=30)
@given(st.integers(1, 40))
def test_oracle_is_thread_safe(g):
    from concurrent.futures import ThreadPoolExecutor

    oracle = DistanceOracle(DistanceSpec.canonical(9))
    with ThreadPoolExecutor(4) as pool:
        got = list(pool.map(oracle.distance, range(g, g + 40)))
    assert got == [naive_distance(9, x) for x in range(g, g + 40)]
