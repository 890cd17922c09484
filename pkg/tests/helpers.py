"""Shared brute-force enumerators and samplers for the test suite."""
from __future__ import annotations

import itertools
import random

from ivybound.essential import InterventionSet
from ivybound.graph import Dag, PDGraph, topological_order


def all_dags(n: int):
    """Every labelled DAG on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for choice in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = [(u, v) if c == 1 else (v, u) for (u, v), c in zip(pairs, choice) if c]
        g = PDGraph(n, frozenset(arcs))
        if topological_order(g) is not None:
            yield Dag.from_graph(g)


def random_dag(n: int, p: float, seed: int) -> Dag:
    """Arbitrary DAG (v-structures allowed): G(n, p) oriented by a shuffled order."""
    r = random.Random(seed)
    perm = list(range(n))
    r.shuffle(perm)
    arcs = [(perm[i], perm[j]) for i, j in itertools.combinations(range(n), 2) if r.random() < p]
    return Dag(n, frozenset(arcs))


def random_interventions(n: int, r: random.Random, max_count: int = 3, max_size: int = 3):
    count = r.randint(0, max_count)
    targets = []
    for _ in range(count):
        k = r.randint(1, min(max_size, n))
        targets.append(r.sample(range(n), k))
    return InterventionSet(targets)


def random_atomic(n: int, r: random.Random) -> InterventionSet:
    return InterventionSet.atomic(v for v in range(n) if r.random() < 0.5)


def maximal_cliques_naive(g: PDGraph) -> set:
    verts = range(g.n)
    cliques = [frozenset(s) for k in range(1, g.n + 1) for s in itertools.combinations(verts, k)
               if all(g.adjacent(u, v) for u, v in itertools.combinations(s, 2))]
    return {c for c in cliques if not any(c < o for o in cliques)}


def has_chordless_cycle(g: PDGraph) -> bool:
    """Exhaustive search for an induced cycle on at least four vertices."""
    for k in range(4, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            edges = [(u, v) for u, v in itertools.combinations(s, 2) if g.adjacent(u, v)]
            if len(edges) != k or any(sum(1 for e in edges if v in e) != 2 for v in s):
                continue
            # k vertices, k edges, all degree 2: a union of cycles; connected means one cycle
            seen, stack = {s[0]}, [s[0]]
            while stack:
                x = stack.pop()
                for u, v in edges:
                    y = v if u == x else u if v == x else None
                    if y is not None and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) == k:
                return True
    return False
