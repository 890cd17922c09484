import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ivybound.bounds import chordal_bounds, clique_count_gap
from ivybound.generators import (bounded_clique_dag, construction1, construction2,
                                 er_dag_no_vstructures, k_tree, orient_from_largest_clique,
                                 pi_seeds, split_graph)
from ivybound.graph import (GraphError, is_chordal, maximal_cliques, skeleton, v_structures)


def test_er_examples():
    assert er_dag_no_vstructures(1, 0.5, 7).n == 1
    d = er_dag_no_vstructures(5, 0.0, 11)
    assert d.n == 5 and not d.directed
    d = er_dag_no_vstructures(10, 0.2, 42)
    assert not v_structures(d) and is_chordal(skeleton(d)).ok
    with pytest.raises(GraphError):
        er_dag_no_vstructures(4, 1.5, 0)


def test_frozen_outputs():
    """Pinned samples; a change here means seeds no longer reproduce old runs."""
    d = er_dag_no_vstructures(6, 0.4, 2024)
    assert sorted(d.directed) == [(1, 4), (2, 0), (2, 1), (2, 3), (2, 5), (3, 0), (3, 1),
                                  (3, 4), (3, 5), (5, 1), (5, 4)]
    d = bounded_clique_dag(8, 2, 4, 7)
    assert sorted(d.directed) == [(0, 1), (0, 2), (0, 3), (0, 4), (0, 6), (1, 2), (1, 3),
                                  (1, 5), (2, 3), (3, 4), (3, 6), (3, 7), (4, 6), (4, 7),
                                  (6, 7)]


def test_clique_examples():
    d = bounded_clique_dag(2, 2, 2, 99)
    assert d.directed == {(0, 1)}
    a, b = bounded_clique_dag(12, 2, 4, 5), bounded_clique_dag(12, 2, 4, 5)
    assert a == b
    with pytest.raises(GraphError):
        bounded_clique_dag(5, 1, 3, 0)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 25), st.floats(0.0, 1.0), st.integers(0, 2 ** 64 - 1))
def test_er_always_valid(n, p, seed):
    d = er_dag_no_vstructures(n, p, seed)
    assert not v_structures(d) and is_chordal(skeleton(d)).ok
    assert d == er_dag_no_vstructures(n, p, seed)


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 30), st.integers(0, 2 ** 32))
def test_clique_dag_always_valid(n, seed):
    d = bounded_clique_dag(n, 2, min(4, n), seed)
    assert not v_structures(d) and is_chordal(skeleton(d)).ok
    assert all(u < v for u, v in d.directed)


def test_constructions():
    g = construction1(2, 3)
    assert g.n == 6 and len(maximal_cliques(g)) == 3 and chordal_bounds(g) == (2, 1)
    g = construction2(3, 3)
    assert g.n == 7 and len(maximal_cliques(g)) == 3 and chordal_bounds(g) == (2, 1)
    g = construction2(1, 5)
    assert g.n == 5 and chordal_bounds(g) == (2, 2)
    for k in range(1, 6):
        for w in range(2, 6):
            for g, cliques in ((construction1(k, w), 2 * k - 1), (construction2(k, w), k)):
                assert len(maximal_cliques(g)) == cliques
                assert g.n - cliques == k * (w - 2) + 1
    with pytest.raises(GraphError):
        construction1(0, 3)


def test_k_tree_examples():
    g = k_tree(2, 5, 0)
    assert len(maximal_cliques(g)) == 3 and clique_count_gap(g) == (2, 2)
    tree = k_tree(1, 8, 3)
    assert len(tree.undirected) == 7 and is_chordal(tree).ok
    with pytest.raises(GraphError):
        k_tree(3, 3, 0)


def test_split_examples():
    g = split_graph(4, 0, 0.5, 1)
    assert g.n == 4 and len(g.undirected) == 6
    g = split_graph(3, 5, 0.0, 1)
    assert all(len(list(g.neighbors(z))) == 1 for z in range(3, 8))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4), st.integers(0, 12), st.integers(0, 2 ** 32))
def test_equality_families(k, extra, seed):
    g = k_tree(k, k + 1 + extra, seed)
    gap, om1 = clique_count_gap(g)
    assert gap == om1
    h = split_graph(k + 1, extra, 0.5, seed)
    assert is_chordal(h).ok and clique_count_gap(h)[0] == clique_count_gap(h)[1]


def test_orientation_has_no_vstructures():
    for g in (construction1(3, 4), construction2(4, 3), k_tree(3, 10, 1), split_graph(3, 6, 0.4, 2)):
        d = orient_from_largest_clique(g)
        assert skeleton(d) == g and not v_structures(d)


def test_pi_seeds():
    assert pi_seeds(2, skip=0, width=5) == [14159, 26535]
    assert len(pi_seeds(3)) == 3
