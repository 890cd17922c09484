"""Clique-block orderings of DAGs without v-structures.

A topological ordering is cut into blocks, each ending at a sink vertex (a
vertex ``s`` whose ``pa(s) | {s}`` is a maximal clique). P1 asks every block
to be a clique; P2 asks that consecutive vertices inside a block have nested
parent sets. ``cbsp_ordering`` produces an ordering with both, starting from
a P1 ordering and repairing the earliest P2 violation until none is left.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import (Dag, GraphError, Verdict, _require_no_vstructures, bits,
                    sink_vertices, to_mask)


@dataclass(frozen=True)
class CliqueBlockOrdering:
    ordering: tuple
    sink_sequence: tuple
    blocks: tuple
    p1: Verdict
    p2: Verdict

    @property
    def p1_holds(self) -> bool:
        return self.p1.ok

    @property
    def p2_holds(self) -> bool:
        return self.p2.ok

    @property
    def is_cbsp(self) -> bool:
        return self.p1.ok and self.p2.ok

    def consecutive_block_pairs(self):
        """Pairs ``(a, b)`` adjacent in the ordering and inside one block."""
        for block in self.blocks:
            for a, b in zip(block, block[1:]):
                yield a, b

    def format(self, names) -> str:
        return " | ".join(" ".join(names[v] for v in block) for block in self.blocks)


@dataclass(frozen=True)
class RepairStep:
    violating_pair: tuple
    block_index: int
    f: int                    # 1-based position of the violating vertex a
    clique_of_a: frozenset    # {a} | pa(a)
    extension_set: frozenset  # {z : clique_of_a <= pa(z)}
    tail_set: frozenset       # vertices after a outside extension_set
    before: tuple
    ordering: tuple


def _check_topological(d: Dag, ordering) -> dict:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(d.n)):
        raise GraphError("ordering is not a permutation of the vertices")
    pos = {v: i for i, v in enumerate(ordering)}
    for u, v in d.directed:
        if pos[u] > pos[v]:
            raise GraphError(f"ordering is not topological: {u} -> {v}")
    return pos


def split_blocks(ordering, cut_set) -> list:
    """Blocks of ``ordering`` ending at members of ``cut_set``; a trailing
    remainder without a cut vertex is returned as the last block."""
    blocks, cur = [], []
    for v in ordering:
        cur.append(v)
        if v in cut_set:
            blocks.append(tuple(cur))
            cur = []
    if cur:
        blocks.append(tuple(cur))
    return blocks


def _is_clique(d: Dag, block) -> bool:
    m = to_mask(block)
    return all(m & ~d.adj_mask[v] == 1 << v for v in block)


def check_p1(d: Dag, ordering) -> Verdict:
    """Clique-block property; witness is the first non-clique block."""
    _check_topological(d, ordering)
    for block in split_blocks(ordering, sink_vertices(d)):
        if not _is_clique(d, block):
            return Verdict(False, frozenset(block))
    return Verdict(True, None)


def check_p2(d: Dag, ordering) -> Verdict:
    """Shared-parents property; witness is the first violating pair ``(a, b)``."""
    _check_topological(d, ordering)
    for block in split_blocks(ordering, sink_vertices(d)):
        for a, b in zip(block, block[1:]):
            if d.pa_mask[a] & ~d.pa_mask[b]:
                return Verdict(False, (a, b))
    return Verdict(True, None)


def is_a_clique_block_ordering(d: Dag, ordering, a_set) -> bool:
    """Blocks delimited by ``a_set`` cover every vertex and are all cliques."""
    _check_topological(d, ordering)
    blocks = split_blocks(ordering, set(a_set))
    if blocks and blocks[-1][-1] not in set(a_set):
        return False
    return all(_is_clique(d, b) for b in blocks)


def describe(d: Dag, ordering) -> CliqueBlockOrdering:
    ordering = tuple(ordering)
    sinks = sink_vertices(d)
    return CliqueBlockOrdering(
        ordering=ordering,
        sink_sequence=tuple(v for v in ordering if v in sinks),
        blocks=tuple(split_blocks(ordering, sinks)),
        p1=check_p1(d, ordering),
        p2=check_p2(d, ordering),
    )


def peel_order(d: Dag, vertices, rank=None) -> list:
    """P1 ordering of ``d[vertices]`` by recursive clique peeling.

    Take the first remaining vertex of the fixed topological order, grow a
    clique greedily over its children (a child joins when the clique so far
    lies inside its parent set), emit it and recurse on what is left.
    """
    if rank is None:
        rank = {v: i for i, v in enumerate(d.topo)}
    remaining = set(vertices)
    out = []
    while remaining:
        top = min(remaining, key=rank.__getitem__)
        clique = [top]
        cmask = 1 << top
        rem_mask = to_mask(remaining)
        for c in sorted(bits(d.ch_mask[top] & rem_mask), key=rank.__getitem__):
            if cmask & d.pa_mask[c] == cmask:
                clique.append(c)
                cmask |= 1 << c
        out.extend(clique)
        remaining.difference_update(clique)
    return out


def clique_block_ordering(d: Dag) -> CliqueBlockOrdering:
    _require_no_vstructures(d, "clique_block_ordering")
    return describe(d, peel_order(d, range(d.n)))


def repair_step(d: Dag, ordering, rank=None) -> RepairStep | None:
    """One repair of the earliest P2 violation, or ``None`` if P2 holds."""
    ordering = tuple(ordering)
    sinks = sink_vertices(d)
    pos = 0
    for bi, block in enumerate(split_blocks(ordering, sinks)):
        for i, (a, b) in enumerate(zip(block, block[1:])):
            if d.pa_mask[a] & ~d.pa_mask[b]:
                j = pos + i
                ca = d.pa_mask[a] | (1 << a)
                sa = frozenset(z for z in range(d.n) if d.pa_mask[z] & ca == ca)
                tail = tuple(z for z in ordering[j + 1:] if z not in sa)
                gamma = peel_order(d, sa, rank)
                tau = ordering[:j + 1] + tuple(gamma) + tail
                return RepairStep((a, b), bi, j + 1, frozenset(bits(ca)), sa,
                                  frozenset(tail), ordering, tau)
        pos += len(block)
    return None


def cbsp_ordering(d: Dag, start=None) -> tuple:
    """A P1+P2 ordering and the list of repair steps taken to reach it.

    ``start`` must be a P1 ordering; by default the clique-peeling one.
    """
    _require_no_vstructures(d, "cbsp_ordering")
    rank = {v: i for i, v in enumerate(d.topo)}
    order = tuple(start) if start is not None else tuple(peel_order(d, range(d.n), rank))
    if not check_p1(d, order):
        raise GraphError("starting ordering does not satisfy P1")
    trace = []
    while True:
        step = repair_step(d, order, rank)
        if step is None:
            break
        if trace and step.f <= trace[-1].f:
            raise AssertionError("repair loop made no progress")
        if len(trace) >= max(d.n - 1, 0):
            raise AssertionError("repair loop exceeded n - 1 iterations")
        trace.append(step)
        order = step.ordering
    result = describe(d, order)
    assert result.is_cbsp, "repair loop ended without P1 and P2"
    return result, trace


def check_repair_step(d: Dag, step: RepairStep) -> Verdict:
    """Soundness properties of a repair step.

    1. The tail set is closed under taking children.
    2. The extension set is non-empty, and each non-sink vertex among ``a``
       and the extension set has a sink child inside the extension set.
    3. Sink vertices of the subgraph induced on the extension set are sinks
       of ``d``.
    """
    sinks = sink_vertices(d)
    a = step.violating_pair[0]
    tail = to_mask(step.tail_set)
    ext = to_mask(step.extension_set)
    for y in step.tail_set:
        if d.ch_mask[y] & ~tail:
            return Verdict(False, ("item1", y))
    if not step.extension_set:
        return Verdict(False, ("item2", "empty extension set"))
    sink_mask = to_mask(sinks)
    for x in {a} | step.extension_set:
        if x not in sinks and not d.ch_mask[x] & ext & sink_mask:
            return Verdict(False, ("item2", x))
    sub = d.induced(step.extension_set)
    keep = sorted(step.extension_set)
    for x in sink_vertices(sub):
        if keep[x] not in sinks:
            return Verdict(False, ("item3", keep[x]))
    return Verdict(True, None)


def format_ordering(d: Dag, ordering) -> str:
    """Vertex names with ``|`` between clique blocks."""
    return describe(d, ordering).format(d.names)


def parse_ordering(text: str, d: Dag) -> tuple:
    toks = [t for t in text.replace("|", " ").split()]
    return tuple(d.index(t) for t in toks)
