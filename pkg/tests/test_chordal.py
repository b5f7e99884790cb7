from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fatforest.chordal import (
    FatForestDecomposition,
    NotChordal,
    NotFatForest,
    fat_forest_decomposition,
    is_chordal,
    is_fat_forest,
    is_perfect_elimination,
    maximal_cliques_chordal,
    mcs_order,
)
from fatforest.complex import Graph, SimplicialComplex, flag_complex, one_skeleton
from fatforest.families import random_fat_forest, random_graph

from conftest import brute_has_chordless_cycle, graphs, is_chordless_cycle

C4 = Graph.cycle(4)


def _later_neighbours_form_cliques(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if any(not g.has_edge(a, b) for a in later for b in later if a < b):
            return False
    return True


def test_mcs_on_edgeless_graph_is_identity():
    assert mcs_order(Graph(6)) == (1, 2, 3, 4, 5, 6)


def test_every_order_of_complete_graph_is_perfect():
    g = Graph.complete(4)
    assert is_perfect_elimination(g, mcs_order(g))
    assert all(is_perfect_elimination(g, p) for p in permutations(range(1, 5)))


def test_no_order_of_c4_is_perfect():
    orders = list(permutations(range(1, 5)))
    assert not any(_later_neighbours_form_cliques(C4, p) for p in orders)
    assert not any(is_perfect_elimination(C4, p) for p in orders)
    assert not is_perfect_elimination(C4, mcs_order(C4))


def test_path_order():
    assert is_perfect_elimination(Graph.path(3), (1, 3, 2))


def test_order_must_be_a_permutation():
    with pytest.raises(ValueError):
        is_perfect_elimination(C4, (1, 2, 3))


def test_five_cycle_certificate():
    ok, cyc = is_chordal(Graph.cycle(5), certificate=True)
    assert not ok
    assert sorted(cyc) == [1, 2, 3, 4, 5] and is_chordless_cycle(Graph.cycle(5), cyc)


@given(st.integers(1, 9), st.integers(0, 2**32))
def test_trees_are_chordal(n, seed):
    import random

    rng = random.Random(seed)
    edges = {(rng.randint(1, v - 1), v) for v in range(2, n + 1)}
    assert is_chordal(Graph(n, frozenset(edges)))


def test_worked_example_skeleton_is_chordal(worked_example):
    assert is_chordal(one_skeleton(worked_example))


@given(graphs(max_n=7))
def test_chordality_matches_cycle_enumeration(g):
    ok, cyc = is_chordal(g, certificate=True)
    assert ok == (not brute_has_chordless_cycle(g))
    assert ok == _later_neighbours_form_cliques(g, mcs_order(g))
    if not ok:
        assert is_chordless_cycle(g, cyc)


def test_maximal_cliques_examples(worked_example):
    assert maximal_cliques_chordal(Graph.path(3)) == [(1, 2), (2, 3)]
    assert maximal_cliques_chordal(Graph.complete(4)) == [(1, 2, 3, 4)]
    assert maximal_cliques_chordal(one_skeleton(worked_example)) == [(1, 2), (2, 3, 4), (5,)]
    with pytest.raises(NotChordal):
        maximal_cliques_chordal(C4)


@given(graphs(max_n=8))
def test_maximal_cliques_cover_and_are_incomparable(g):
    if not is_chordal(g):
        return
    cliques = maximal_cliques_chordal(g)
    assert len(cliques) <= max(g.n, 1)
    sets = [set(q) for q in cliques]
    assert all(not (a < b) for a in sets for b in sets)
    assert set().union(*sets) == set(range(1, g.n + 1))
    assert cliques == sorted(flag_complex(g).facets)


def test_worked_example_decomposition_order(worked_example):
    d = fat_forest_decomposition(worked_example)
    assert d.facets == ((2, 3, 4), (1, 2), (5,))
    assert d.attach_dims == (0, -1)
    assert d.dims == (2, 1, 0)
    assert d.parents == (None, 0, None)


def test_single_simplex_decomposition():
    d = fat_forest_decomposition(SimplicialComplex.simplex(4))
    assert d.k == 1 and d.attach_dims == ()


def test_pentagon_is_refused(pentagon):
    with pytest.raises(NotFatForest) as exc:
        fat_forest_decomposition(pentagon)
    assert exc.value.reason == "not-chordal"
    assert is_chordless_cycle(one_skeleton(pentagon), exc.value.certificate)
    assert not is_fat_forest(pentagon)


def test_hollow_triangle_is_not_flag():
    with pytest.raises(NotFatForest) as exc:
        fat_forest_decomposition(SimplicialComplex(3, [[1, 2], [2, 3], [1, 3]]))
    assert exc.value.reason == "not-flag" and exc.value.certificate == (1, 2, 3)


def test_uncovered_vertex_is_not_flag():
    with pytest.raises(NotFatForest) as exc:
        fat_forest_decomposition(SimplicialComplex(3, [[1, 2]]))
    assert exc.value.certificate == (3,)


def test_void_is_refused():
    with pytest.raises(NotFatForest):
        fat_forest_decomposition(SimplicialComplex.void(2))


def test_is_fat_forest_examples(worked_example, pentagon):
    assert is_fat_forest(worked_example)
    assert is_fat_forest(SimplicialComplex.simplex(3))
    assert not is_fat_forest(pentagon)


@given(graphs(max_n=8))
def test_chordal_iff_flag_complex_is_fat_forest(g):
    assert is_chordal(g) == is_fat_forest(flag_complex(g))


def _replay(d: FatForestDecomposition):
    union = set(d.facets[0])
    for j in range(1, d.k):
        h = union & set(d.facets[j])
        assert tuple(sorted(h)) == d.attachments[j]
        assert any(h <= set(d.facets[i]) for i in range(j))
        assert len(h) - 1 < len(d.facets[j]) - 1
        union |= set(d.facets[j])
    return union


@given(graphs(max_n=8))
def test_decomposition_replays(g):
    if not is_chordal(g):
        return
    d = fat_forest_decomposition(flag_complex(g))
    union = _replay(d)
    assert union == set(range(1, g.n + 1))
    assert sum(x + 1 for x in d.dims) - sum(r + 1 for r in d.attach_dims) == g.n


@given(st.integers(0, 2**63 - 1))
def test_random_forests_decompose(seed):
    d = random_fat_forest(6, 4, seed)
    c = d.complex()
    assert c.facets == tuple(sorted(d.facets))
    d2 = fat_forest_decomposition(c)
    _replay(d2)
    assert sorted(d2.dims) == sorted(d.dims)
    assert sorted(d2.attach_dims) == sorted(d.attach_dims)


def test_many_random_forests_are_fat_forests():
    assert all(is_fat_forest(random_fat_forest(5, 4, s).complex()) for s in range(1000))


def test_random_graph_is_deterministic():
    assert random_graph(8, 0.5, 3) == random_graph(8, 0.5, 3)
    assert random_fat_forest(4, 3, 11) == random_fat_forest(4, 3, 11)
    assert random_fat_forest(1, 3, 5).k == 1
