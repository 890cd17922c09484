"""Synthetic graphs: the two experiment generators and the analysed families.

Randomness comes from ``numpy.random.Generator`` over ``PCG64`` seeded with a
64-bit integer; the same parameters and seed give the same graph.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from .graph import Dag, GraphError, PDGraph, bits, dag_from_order, maximal_cliques, mcs_order

RNG_NAME = "numpy.random.PCG64"


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(int(seed) & (2 ** 64 - 1)))


def _close_parents(pa: list, pos, u: int) -> None:
    """Join every non-adjacent parent pair of ``u`` along ``pos``."""
    ps = list(bits(pa[u]))
    for a, b in combinations(ps, 2):
        if not (pa[a] >> b & 1 or pa[b] >> a & 1):
            if pos[a] < pos[b]:
                pa[b] |= 1 << a
            else:
                pa[a] |= 1 << b


def _dag_from_parents(n: int, pa: list) -> Dag:
    arcs = [(u, v) for v in range(n) for u in bits(pa[v])]
    return Dag(n, frozenset(arcs))


def er_dag_no_vstructures(n: int, p: float, seed: int) -> Dag:
    """G(n, p), oriented along a random permutation, then parent pairs closed
    in reverse permutation order so no v-structure survives."""
    if not 0.0 <= p <= 1.0:
        raise GraphError("p must lie in [0, 1]")
    if n < 1:
        raise GraphError("n must be at least 1")
    g = rng(seed)
    draws = g.random(n * (n - 1) // 2)
    perm = g.permutation(n)
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[int(v)] = i
    pa = [0] * n
    for (u, v), x in zip(combinations(range(n), 2), draws):
        if x < p:
            if pos[u] < pos[v]:
                pa[v] |= 1 << u
            else:
                pa[u] |= 1 << v
    for u in reversed(perm):
        _close_parents(pa, pos, int(u))
    return _dag_from_parents(n, pa)


def bounded_clique_dag(n: int, min_clique_size: int, max_clique_size: int, seed: int) -> Dag:
    """Random DAG on ``0..n-1`` (identity elimination order) with parent counts
    aimed at ``[min - 1, max - 1]``; parent-pair closure can overshoot."""
    if not 2 <= min_clique_size <= max_clique_size <= n:
        raise GraphError("need 2 <= min_clique_size <= max_clique_size <= n")
    g = rng(seed)
    pos = list(range(n))
    pa = [0] * n
    for u in range(n - 1, -1, -1):
        have = pa[u].bit_count()
        free = [v for v in range(u) if not pa[u] >> v & 1]
        lo = min(len(free), max(0, min_clique_size - 1 - have))
        hi = min(len(free), max(0, max_clique_size - 1 - have))
        ell = int(g.integers(lo, hi + 1))
        if ell:
            for z in g.choice(len(free), size=ell, replace=False):
                pa[u] |= 1 << free[int(z)]
        _close_parents(pa, pos, u)
    return _dag_from_parents(n, pa)


def _undirected(n: int, pairs, names=()) -> PDGraph:
    return PDGraph(n, frozenset(), frozenset(pairs), tuple(names))


def construction1(k: int, omega: int) -> PDGraph:
    """Cliques ``C_1..C_k`` of size ``omega`` strung on a path ``1..2k``;
    ``C_p`` contains path vertices ``2p-1`` and ``2p``."""
    if k < 1 or omega < 2:
        raise GraphError("need k >= 1 and omega >= 2")
    names, pairs = [], []
    line = []
    for p in range(1, k + 1):
        members = []
        for t in (2 * p - 1, 2 * p):
            line.append(len(names))
            members.append(len(names))
            names.append(f"L{t}")
        for t in range(omega - 2):
            members.append(len(names))
            names.append(f"C{p}_{t}")
        pairs.extend(combinations(members, 2))
    pairs.extend((line[i], line[i + 1]) for i in range(1, len(line) - 1, 2))
    return _undirected(len(names), pairs, names)


def construction2(k: int, omega: int) -> PDGraph:
    """``k`` cliques of size ``omega`` sharing one common vertex."""
    if k < 1 or omega < 2:
        raise GraphError("need k >= 1 and omega >= 2")
    names = ["v"]
    pairs = []
    for p in range(k):
        members = [0]
        for t in range(omega - 1):
            members.append(len(names))
            names.append(f"C{p}_{t}")
        pairs.extend(combinations(members, 2))
    return _undirected(len(names), pairs, names)


def k_tree(k: int, n: int, seed: int) -> PDGraph:
    """Start from ``K_{k+1}``; each new vertex joins a uniformly chosen k-clique."""
    if k < 1 or n < k + 1:
        raise GraphError("need k >= 1 and n >= k + 1")
    g = rng(seed)
    pairs = list(combinations(range(k + 1), 2))
    kcliques = [tuple(c) for c in combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = kcliques[int(g.integers(len(kcliques)))]
        pairs.extend((u, v) for u in base)
        for drop in range(k):
            kcliques.append(tuple(sorted(base[:drop] + base[drop + 1:] + (v,))))
    return _undirected(n, pairs)


def split_graph(clique_size: int, independent_size: int, attach_prob: float, seed: int) -> PDGraph:
    """Clique ``0..c-1`` plus independent vertices; each independent vertex
    joins each clique vertex with probability ``attach_prob`` (at least one)."""
    if clique_size < 1 or independent_size < 0 or not 0.0 <= attach_prob <= 1.0:
        raise GraphError("need clique_size >= 1, independent_size >= 0, attach_prob in [0, 1]")
    g = rng(seed)
    c = clique_size
    pairs = list(combinations(range(c), 2))
    for z in range(c, c + independent_size):
        hits = [u for u, x in zip(range(c), g.random(c)) if x < attach_prob]
        if not hits:
            hits = [int(g.integers(c))]
        pairs.extend((u, z) for u in hits)
    return _undirected(c + independent_size, pairs)


def orient_from_largest_clique(g: PDGraph) -> Dag:
    """Orient a chordal graph along an MCS order that starts inside a largest clique."""
    cliques = maximal_cliques(g)
    if not cliques:
        return Dag(0)
    largest = max(cliques, key=lambda c: (len(c), [-v for v in sorted(c)]))
    return dag_from_order(g, mcs_order(g, prefer=largest))


def pi_seeds(count: int, skip: int = 1015, width: int = 10) -> list:
    """Seeds cut from consecutive ``width``-digit runs of pi's decimal
    expansion after skipping ``skip`` digits."""
    import mpmath

    digits_needed = skip + count * width
    with mpmath.workdps(digits_needed + 20):
        text = mpmath.nstr(mpmath.pi, digits_needed + 10, strip_zeros=False)
    decimals = text.split(".")[1]
    return [int(decimals[skip + i * width: skip + (i + 1) * width]) for i in range(count)]


FAMILIES = {
    "er": (er_dag_no_vstructures, (int, float)),
    "clique": (bounded_clique_dag, (int, int, int)),
    "construction1": (construction1, (int, int)),
    "construction2": (construction2, (int, int)),
    "ktree": (k_tree, (int, int)),
    "split": (split_graph, (int, int, float)),
}
SEEDED = {"er", "clique", "ktree", "split"}
