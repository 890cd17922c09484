import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import all_dags
from ivybound.generators import bounded_clique_dag, er_dag_no_vstructures
from ivybound.graph import GraphError, make_dag, sink_vertices, v_structures
from ivybound.orderings import (cbsp_ordering, check_p1, check_p2, check_repair_step,
                                clique_block_ordering, describe, format_ordering,
                                is_a_clique_block_ordering, parse_ordering, peel_order,
                                split_blocks)


def test_six_p1_witness(six, ids):
    v = check_p1(six, ids("abcdef"))
    assert not v.ok and v.witness == frozenset(ids("cde"))


def test_six_p2_witness(six, ids):
    sigma = ids("abcdfe")
    assert check_p1(six, sigma).ok
    v = check_p2(six, sigma)
    assert not v.ok and v.witness == tuple(ids("cd"))


def test_six_tau_is_cbsp(six, ids):
    tau = ids("abcedf")
    assert check_p1(six, tau).ok and check_p2(six, tau).ok
    assert format_ordering(six, tau) == "a b | c e | d f"


def test_six_a_clique_block(six, ids):
    tau = ids("abcedf")
    assert is_a_clique_block_ordering(six, tau, ids("bef"))
    assert not is_a_clique_block_ordering(six, tau, ids("be"))
    assert is_a_clique_block_ordering(six, tau, range(6))


def test_six_cbsp_and_default_p1(six):
    start = clique_block_ordering(six)
    assert start.p1_holds
    res, trace = cbsp_ordering(six)
    assert res.is_cbsp
    assert [six.names[v] for v in res.sink_sequence] == ["b", "e", "f"]


def test_repair_from_sigma(ids):
    d = make_dag("abcdef", [("a", "b"), ("b", "c"), ("b", "e"), ("c", "e"), ("c", "d"),
                            ("c", "f"), ("d", "f")])
    sigma = [d.index(x) for x in "abcdfe"]
    res, trace = cbsp_ordering(d, sigma)
    assert len(trace) == 1
    step = trace[0]
    assert step.violating_pair == (d.index("c"), d.index("d")) and step.f == 3
    assert step.extension_set == frozenset({d.index("e")})
    assert res.ordering == tuple(d.index(x) for x in "abcedf")
    assert check_repair_step(d, step).ok


def test_non_topological_rejected(six, ids):
    with pytest.raises(GraphError):
        check_p1(six, ids("bacdef"))
    with pytest.raises(GraphError):
        check_p2(six, [0, 1, 2])


def test_requires_no_vstructures():
    with pytest.raises(GraphError):
        cbsp_ordering(make_dag("abc", [("a", "c"), ("b", "c")]))


def test_bad_start_rejected(six, ids):
    with pytest.raises(GraphError):
        cbsp_ordering(six, ids("abcdef"))


def test_split_blocks_tail():
    assert split_blocks([1, 2, 3, 4], {2}) == [(1, 2), (3, 4)]


def test_parse_ordering(six, ids):
    assert parse_ordering("a b | c e | d f", six) == tuple(ids("abcedf"))


def test_all_small_dags():
    for n in range(1, 5):
        for d in all_dags(n):
            if v_structures(d):
                continue
            res, trace = cbsp_ordering(d)
            assert res.is_cbsp
            assert len(res.sink_sequence) == len(sink_vertices(d))
            for step in trace:
                assert check_repair_step(d, step).ok


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 14), st.floats(0.0, 0.8), st.integers(0, 2 ** 32))
def test_peeling_gives_p1_and_repair_terminates(n, p, seed):
    d = er_dag_no_vstructures(n, p, seed)
    assert check_p1(d, peel_order(d, range(n))).ok
    res, trace = cbsp_ordering(d)
    assert res.is_cbsp and len(trace) <= max(n - 1, 0)
    fs = [s.f for s in trace]
    assert fs == sorted(set(fs))
    for step in trace:
        assert check_repair_step(d, step).ok
        assert step.before[:step.f] == step.ordering[:step.f]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 16), st.integers(0, 2 ** 32))
def test_clique_bounded_family(n, seed):
    d = bounded_clique_dag(n, 2, min(4, n), seed)
    res, _ = cbsp_ordering(d)
    assert res.is_cbsp
    assert describe(d, res.ordering) == res
    # the superset property: any superset of the sink set still cuts into cliques
    assert is_a_clique_block_ordering(d, res.ordering, set(range(n)))
    assert is_a_clique_block_ordering(d, res.ordering, sink_vertices(d))
