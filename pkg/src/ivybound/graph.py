"""Partially directed graphs and the chordal / chain-graph machinery.

Vertices are dense integer ids ``0..n-1`` with a side tuple of display names.
Adjacency queries go through per-vertex bitmasks, which the exhaustive
oracles lean on heavily.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Raised for structurally invalid graphs or unmet preconditions."""


class Verdict(NamedTuple):
    """A boolean answer that carries a witness (or violation) alongside."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, eq=False)
class PDGraph:
    """Partially directed graph with canonical edge storage.

    ``directed`` holds ordered pairs ``(u, v)`` meaning ``u -> v``;
    ``undirected`` holds pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    directed: frozenset = frozenset()
    undirected: frozenset = frozenset()
    names: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        directed = frozenset((int(u), int(v)) for u, v in self.directed)
        undirected = frozenset((min(u, v), max(u, v)) for u, v in self.undirected)
        object.__setattr__(self, "directed", directed)
        object.__setattr__(self, "undirected", undirected)
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.n)))
        elif len(self.names) != self.n:
            raise GraphError("names length does not match vertex count")
        seen = set()
        for u, v in list(directed) + list(undirected):
            if u == v:
                raise GraphError(f"self adjacency at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"vertex out of range in ({u}, {v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"more than one adjacency between {u} and {v}")
            seen.add(key)

    def __eq__(self, other):
        if not isinstance(other, PDGraph):
            return NotImplemented
        return (self.n, self.directed, self.undirected) == (other.n, other.directed, other.undirected)

    def __hash__(self):
        return hash((self.n, self.directed, self.undirected))

    # -- bitmask views -------------------------------------------------------

    @cached_property
    def _masks(self):
        pa = [0] * self.n
        ch = [0] * self.n
        und = [0] * self.n
        for u, v in self.directed:
            ch[u] |= 1 << v
            pa[v] |= 1 << u
        for u, v in self.undirected:
            und[u] |= 1 << v
            und[v] |= 1 << u
        adj = [pa[i] | ch[i] | und[i] for i in range(self.n)]
        return tuple(pa), tuple(ch), tuple(und), tuple(adj)

    @cached_property
    def _vstructs(self) -> frozenset:
        return _v_structures(self)

    @property
    def pa_mask(self) -> tuple:
        return self._masks[0]

    @property
    def ch_mask(self) -> tuple:
        return self._masks[1]

    @property
    def und_mask(self) -> tuple:
        return self._masks[2]

    @property
    def adj_mask(self) -> tuple:
        return self._masks[3]

    # -- set views -----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def parents(self, v: int) -> frozenset:
        return frozenset(bits(self.pa_mask[v]))

    def children(self, v: int) -> frozenset:
        return frozenset(bits(self.ch_mask[v]))

    def neighbors(self, v: int) -> frozenset:
        """Vertices joined to ``v`` by an undirected edge."""
        return frozenset(bits(self.und_mask[v]))

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj_mask[u] >> v & 1)

    def has_arrow(self, u: int, v: int) -> bool:
        return bool(self.ch_mask[u] >> v & 1)

    def has_line(self, u: int, v: int) -> bool:
        return bool(self.und_mask[u] >> v & 1)

    def pairs(self) -> list:
        """All adjacent pairs ``(u, v)`` with ``u < v`` in canonical order."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.directed} | self.undirected)

    @property
    def is_directed(self) -> bool:
        return not self.undirected

    @property
    def is_undirected(self) -> bool:
        return not self.directed

    def name(self, v: int) -> str:
        return self.names[v]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def induced(self, vertices: Iterable[int]) -> "PDGraph":
        """Induced subgraph relabelled to ``0..k-1`` in increasing old-id order."""
        keep = sorted(set(vertices))
        new = {old: i for i, old in enumerate(keep)}
        directed = [(new[u], new[v]) for u, v in self.directed if u in new and v in new]
        undirected = [(new[u], new[v]) for u, v in self.undirected if u in new and v in new]
        return type(self)(len(keep), frozenset(directed), frozenset(undirected),
                          tuple(self.names[i] for i in keep))

    def __str__(self) -> str:
        return write_edge_list(self).strip()


class Dag(PDGraph):
    """A fully directed, acyclic :class:`PDGraph`."""

    def __post_init__(self):
        super().__post_init__()
        if self.undirected:
            raise GraphError("a DAG cannot contain undirected edges")
        if topological_order(self) is None:
            raise GraphError("directed cycle")

    @classmethod
    def from_graph(cls, g: PDGraph) -> "Dag":
        return cls(g.n, g.directed, g.undirected, g.names)

    @cached_property
    def topo(self) -> tuple:
        """Topological order with lowest-id tie-breaking."""
        return tuple(topological_order(self))


def topological_order(g: PDGraph):
    """Kahn's algorithm over directed edges, smallest id first; ``None`` on a cycle."""
    indeg = [len(list(bits(m))) for m in g.pa_mask]
    heap = [v for v in range(g.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in bits(g.ch_mask[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == g.n else None


def dag_from_order(g: PDGraph, order) -> Dag:
    """Orient every adjacency of ``g`` along ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    arcs = [(u, v) if pos[u] < pos[v] else (v, u) for u, v in g.pairs()]
    return Dag(g.n, frozenset(arcs), frozenset(), g.names)


def skeleton(g: PDGraph) -> PDGraph:
    return PDGraph(g.n, frozenset(), frozenset(g.pairs()), g.names)


def v_structures(g: PDGraph) -> set:
    """Triples ``(b, a, c)`` with ``b -> a <- c``, ``b`` and ``c`` non-adjacent, ``b < c``."""
    return set(g._vstructs)


def _v_structures(g: PDGraph) -> frozenset:
    out = set()
    for a in range(g.n):
        pa = sorted(bits(g.pa_mask[a]))
        for i, b in enumerate(pa):
            for c in pa[i + 1:]:
                if not g.adjacent(b, c):
                    out.add((b, a, c))
    return frozenset(out)


def mcs_order(g: PDGraph, prefer: Iterable[int] = ()) -> list:
    """Maximum-cardinality search visit order over all adjacencies of ``g``.

    Ties go to vertices in ``prefer`` first, then to the smallest id.
    """
    prefer = set(prefer)
    weight = [0] * g.n
    visited = [False] * g.n
    order = []
    for _ in range(g.n):
        best = max((v for v in range(g.n) if not visited[v]),
                   key=lambda v: (weight[v], v in prefer, -v))
        visited[best] = True
        order.append(best)
        for w in bits(g.adj_mask[best]):
            if not visited[w]:
                weight[w] += 1
    return order


def is_peo(g: PDGraph, order) -> bool:
    """True iff the earlier neighbours of each vertex in ``order`` form a clique."""
    seen = 0
    for v in order:
        earlier = g.adj_mask[v] & seen
        for u in bits(earlier):
            if earlier & ~g.adj_mask[u] & ~(1 << u):
                return False
        seen |= 1 << v
    return True


def chordal_peo(g: PDGraph):
    """A perfect elimination ordering of undirected ``g`` or ``None`` if not chordal."""
    if g.directed:
        raise GraphError("chordality is defined here for undirected graphs only")
    order = mcs_order(g)
    return order if is_peo(g, order) else None


def is_chordal(g: PDGraph) -> Verdict:
    """Chordality test; the witness is an MCS perfect elimination ordering."""
    peo = chordal_peo(g)
    return Verdict(peo is not None, peo)


def _cliques_from_peo(g: PDGraph, order) -> list:
    seen = 0
    cands = []
    for v in order:
        cands.append((g.adj_mask[v] & seen) | (1 << v))
        seen |= 1 << v
    cands = set(cands)
    maximal = [c for c in cands if not any(c != o and c & o == c for o in cands)]
    return maximal


def maximal_cliques(g: PDGraph) -> list:
    """Maximal cliques of a chordal undirected graph, sorted canonically."""
    peo = chordal_peo(g)
    if peo is None:
        raise GraphError("maximal_cliques requires a chordal graph")
    masks = _cliques_from_peo(g, peo)
    return sorted((frozenset(bits(m)) for m in masks), key=lambda c: sorted(c))


@dataclass(frozen=True)
class ChainDecomposition:
    components: tuple
    component_of: tuple

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def chain_components(g: PDGraph) -> ChainDecomposition:
    """Connected components after dropping every directed edge.

    Components are ordered by their smallest vertex.
    """
    comp = [-1] * g.n
    comps = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        idx = len(comps)
        stack, members = [s], []
        comp[s] = idx
        while stack:
            v = stack.pop()
            members.append(v)
            for w in bits(g.und_mask[v]):
                if comp[w] < 0:
                    comp[w] = idx
                    stack.append(w)
        comps.append(frozenset(members))
    return ChainDecomposition(tuple(comps), tuple(comp))


def is_chain_graph(g: PDGraph) -> bool:
    """No cycle mixing forward arrows and lines may contain an arrow."""
    cc = chain_components(g)
    k = len(cc)
    succ = [set() for _ in range(k)]
    for u, v in g.directed:
        cu, cv = cc.component_of[u], cc.component_of[v]
        if cu == cv:
            return False
        succ[cu].add(cv)
    # acyclicity of the component quotient
    state = [0] * k
    for root in range(k):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[node] = 2
                stack.pop()
            elif state[nxt] == 1:
                return False
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(succ[nxt])))
    return True


def _require_no_vstructures(d: PDGraph, what: str):
    if v_structures(d):
        raise GraphError(f"{what} requires a DAG without v-structures")


def sink_vertices(d: Dag) -> frozenset:
    """Vertices ``v`` whose ``pa(v) | {v}`` is a maximal clique (no v-structures assumed)."""
    out = []
    for v in range(d.n):
        closed = d.pa_mask[v] | (1 << v)
        if not any(closed & d.pa_mask[w] == closed for w in bits(d.ch_mask[v])):
            out.append(v)
    return frozenset(out)


def sink_nodes(d: Dag) -> dict:
    """Map each maximal clique of the skeleton to its unique sink vertex."""
    _require_no_vstructures(d, "sink_nodes")
    out = {}
    for clique in maximal_cliques(skeleton(d)):
        m = to_mask(clique)
        (s,) = [v for v in clique if d.pa_mask[v] | (1 << v) == m]
        out[clique] = s
    return out


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> PDGraph:
    """Parse ``u -> v`` / ``u -- v`` lines; a lone token declares a vertex.

    Ids are assigned in order of first appearance.
    """
    names: dict = {}

    def vid(tok):
        if tok not in names:
            names[tok] = len(names)
        return names[tok]

    directed, undirected = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 3 and parts[1] in ("->", "--"):
            u, v = vid(parts[0]), vid(parts[2])
            (directed if parts[1] == "->" else undirected).append((u, v))
        else:
            raise GraphError(f"line {lineno}: cannot parse {raw!r}")
    order = sorted(names, key=names.get)
    return PDGraph(len(order), frozenset(directed), frozenset(undirected), tuple(order))


def write_edge_list(g: PDGraph) -> str:
    lines = []
    first_seen = []
    for u, v in sorted(g.directed | g.undirected, key=lambda e: (min(e), max(e))):
        for x in (u, v):
            if x not in first_seen:
                first_seen.append(x)
        op = "->" if (u, v) in g.directed else "--"
        lines.append(f"{g.names[u]} {op} {g.names[v]}")
    # declare vertices up front unless first appearance already yields id order
    if first_seen != list(range(len(first_seen))) or len(first_seen) < g.n:
        lines = list(g.names) + lines
    return "\n".join(lines) + "\n"


def read_dag(text: str) -> Dag:
    return Dag.from_graph(parse_edge_list(text))


def make_dag(names, arcs) -> Dag:
    """Build a DAG from display names and ``(name, name)`` arcs."""
    names = tuple(names)
    idx = {nm: i for i, nm in enumerate(names)}
    return Dag(len(names), frozenset((idx[a], idx[b]) for a, b in arcs), frozenset(), names)


def make_undirected(names, pairs) -> PDGraph:
    names = tuple(names)
    idx = {nm: i for i, nm in enumerate(names)}
    return PDGraph(len(names), frozenset(), frozenset((idx[a], idx[b]) for a, b in pairs), names)
