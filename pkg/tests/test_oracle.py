import itertools

import pytest

from helpers import all_dags
from ivybound.bounds import universal_lower_bound
from ivybound.essential import InterventionSet, fully_orients
from ivybound.generators import er_dag_no_vstructures
from ivybound.graph import make_dag
from ivybound.oracle import optimal_atomic_size


def whole_graph_optimum(d):
    for size in range(d.n + 1):
        for combo in itertools.combinations(range(d.n), size):
            if fully_orients(d, InterventionSet.atomic(combo)):
                return size


def test_examples(six):
    path = make_dag("abc", [("a", "b"), ("b", "c")])
    res = optimal_atomic_size(path)
    assert res.optimal_size == 1 and res.witness_set == (0,) and not res.budget_hit
    k3 = make_dag("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert optimal_atomic_size(k3).optimal_size == 1
    res = optimal_atomic_size(six)
    assert res.optimal_size == 3
    assert sorted(six.names[v] for v in res.witness_set) == ["a", "c", "d"]


def test_budget_hit(six):
    res = optimal_atomic_size(six, budget=5)
    assert res.budget_hit and res.optimal_size is None and res.subsets_checked == 5


def test_component_additivity_on_all_four_vertex_dags():
    for d in all_dags(4):
        assert optimal_atomic_size(d).optimal_size == whole_graph_optimum(d)


@pytest.mark.parametrize("seed", range(25))
def test_sandwich_and_additivity(seed):
    d = er_dag_no_vstructures(7, 0.35, seed)
    rep = universal_lower_bound(d)
    res = optimal_atomic_size(d)
    assert res.optimal_size == whole_graph_optimum(d)
    assert rep.our_bound <= res.optimal_size <= rep.n - rep.r <= 2 * rep.our_bound
    assert fully_orients(d, InterventionSet.atomic(res.witness_set))
