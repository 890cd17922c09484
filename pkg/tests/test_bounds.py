import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_dag
from ivybound.bounds import (BoundsReport, ceil_div, chordal_bounds, clique_count_gap,
                             multi_node_lower_bound, prior_lower_bound, universal_lower_bound)
from ivybound.generators import construction1, er_dag_no_vstructures, orient_from_largest_clique
from ivybound.graph import Dag, GraphError, make_dag, make_undirected, skeleton

PATH = make_dag("abc", [("a", "b"), ("b", "c")])
COLLIDER = make_dag("abc", [("a", "c"), ("b", "c")])
K4 = make_dag("abcd", [(x, y) for i, x in enumerate("abcd") for y in "abcd"[i + 1:]])


def test_six_report(six):
    rep = universal_lower_bound(six)
    assert (rep.n, rep.r, rep.r_star, rep.omega) == (6, 3, 3, 3)
    assert (rep.our_bound, rep.prior_bound) == (2, 1)
    assert rep.csv_row() == "6,3,3,3,2,1"
    assert BoundsReport.CSV_HEADER == "n,r,r_star,omega,our_bound,prior_bound"


def test_small_examples():
    assert universal_lower_bound(PATH).our_bound == 1
    assert universal_lower_bound(COLLIDER).our_bound == 0
    assert prior_lower_bound(K4) == 2
    assert prior_lower_bound(COLLIDER) == 0


def test_multi_node(six):
    assert multi_node_lower_bound(six, 2) == 1
    assert multi_node_lower_bound(six, 1) == 2
    assert all(multi_node_lower_bound(COLLIDER, k) == 0 for k in (1, 2, 5))
    with pytest.raises(ValueError):
        multi_node_lower_bound(six, 0)
    assert universal_lower_bound(six).multi_node_upper(2) == 1 + 2


def test_clique_count_gap(six):
    assert clique_count_gap(skeleton(six)) == (3, 2)
    for n in range(1, 7):
        kn = make_undirected(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])
        assert clique_count_gap(kn) == (n - 1, n - 1)
    assert clique_count_gap(construction1(2, 3)) == (3, 2)
    with pytest.raises(GraphError):
        clique_count_gap(six)


def test_chordal_bounds_construction():
    assert chordal_bounds(construction1(2, 3)) == (2, 1)


def test_ceil_div():
    assert [ceil_div(a, 2) for a in range(-2, 4)] == [-1, 0, 0, 1, 1, 2]


def test_per_component_sum():
    # two disjoint undirected triangles joined by nothing: two chain components
    arcs = [("a", "b"), ("a", "c"), ("b", "c"), ("x", "y"), ("x", "z"), ("y", "z")]
    rep = universal_lower_bound(make_dag("abcxyz", arcs))
    assert rep.per_component == ((3, 1, 3), (3, 1, 3))
    assert (rep.our_bound, rep.prior_bound) == (2, 2)


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 12), st.floats(0.0, 1.0), st.integers(0, 2 ** 32))
def test_dominance_without_vstructures(n, p, seed):
    rep = universal_lower_bound(er_dag_no_vstructures(n, p, seed))
    assert rep.our_bound >= rep.prior_bound
    for s, r, w in rep.per_component:
        assert s - r >= w - 1


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 10), st.floats(0.0, 1.0), st.integers(0, 2 ** 32))
def test_dominance_general(n, p, seed):
    rep = universal_lower_bound(random_dag(n, p, seed))
    assert rep.our_bound >= rep.prior_bound
    assert rep.r_star <= rep.r and sum(s for s, _, _ in rep.per_component) == n


def test_orient_construction_keeps_bounds():
    g = construction1(3, 4)
    d = orient_from_largest_clique(g)
    assert isinstance(d, Dag) and skeleton(d) == g
    rep = universal_lower_bound(d)
    assert (rep.our_bound, rep.prior_bound) == chordal_bounds(g)
