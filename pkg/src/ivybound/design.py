"""Intervention sets meeting the upper bounds.

Every result is re-checked with ``fully_orients``; nothing is certified by
construction alone.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bounds import ceil_div, universal_lower_bound
from .essential import InterventionSet, essential_graph, fully_orients
from .graph import Dag, bits, chain_components, sink_vertices
from .orderings import peel_order, split_blocks


@dataclass(frozen=True)
class DesignResult:
    interventions: InterventionSet
    certified: bool
    size: int
    guarantee: str
    guarantee_value: int
    order: tuple = ()   # targeted vertices in canonical emission order

    def summary(self) -> str:
        return f"size={self.size} certified={str(self.certified).lower()} guarantee={self.guarantee}"


def _components(d: Dag):
    return [sorted(c) for c in chain_components(essential_graph(d)) if len(c) > 1]


def sink_complement_interventions(d: Dag) -> DesignResult:
    """Every non-sink vertex of every non-trivial chain component, atomically."""
    targets = []
    for comp in _components(d):
        sub = d.induced(comp)
        sinks = sink_vertices(sub)
        targets.extend(comp[i] for i in range(sub.n) if i not in sinks)
    iv = InterventionSet.atomic(targets)
    rep = universal_lower_bound(d)
    return DesignResult(iv, fully_orients(d, iv), iv.size, "n-r", rep.n - rep.r,
                        tuple(sorted(targets)))


def _single_target(sub: Dag) -> list:
    """Alternating-parity selection over the blocks of a P1 ordering."""
    order = peel_order(sub, range(sub.n))
    pos = {v: i for i, v in enumerate(order)}
    chosen: list = []
    chosen_set = set()
    for j, block in enumerate(split_blocks(order, sink_vertices(sub))):
        if j == 0:
            odd = True
        else:
            head = block[0]
            parents = list(bits(sub.pa_mask[head]))
            assert parents, "block head without a parent in a connected component"
            latest = max(parents, key=pos.__getitem__)
            odd = latest not in chosen_set
        picks = block[0::2] if odd else block[1::2]
        chosen.extend(picks)
        chosen_set.update(picks)
    return chosen


def single_multinode_intervention(d: Dag) -> DesignResult:
    """One intervention ``I`` with ``{empty, I}`` fully orienting ``d``."""
    target: list = []
    bound = 0
    for comp in _components(d):
        sub = d.induced(comp)
        target.extend(comp[i] for i in _single_target(sub))
        order = peel_order(sub, range(sub.n))
        bound += sum(ceil_div(len(b), 2) for b in split_blocks(order, sink_vertices(sub)))
    iv = InterventionSet([target] if target else [])
    return DesignResult(iv, fully_orients(d, iv), iv.size, "single-intervention", bound,
                        tuple(target))


def bounded_size_intervention_set(d: Dag, k: int) -> DesignResult:
    """Chunk the single intervention into consecutive pieces of at most ``k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    single = single_multinode_intervention(d)
    target = list(single.order)
    chunks = [target[i:i + k] for i in range(0, len(target), k)]
    iv = InterventionSet(chunks)
    upper = universal_lower_bound(d).multi_node_upper(k)
    return DesignResult(iv, fully_orients(d, iv), iv.size, "size-k", upper, tuple(target))
