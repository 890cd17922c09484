"""Interventional essential graphs.

``i_essential_graph`` seeds the skeleton with v-structure and intervention-cut
orientations, closes it under the four Meek rules, and then insists that the
result passes ``check_i_essential``. Because the characterization checked
there pins down the essential graph uniquely, the validator is the real
source of truth; the closure only has to find the right candidate.

``i_mec`` / ``i_mec_union`` are the exhaustive oracle over acyclic
orientations of the skeleton.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph import (Dag, GraphError, PDGraph, Verdict, bits, chain_components,
                    chordal_peo, is_chain_graph, to_mask, v_structures)

DEFAULT_MEC_BUDGET = 10 ** 6


class EssentialGraphError(RuntimeError):
    """The Meek closure produced a graph that fails the characterization."""


class BudgetExceeded(RuntimeError):
    pass


class InterventionSet:
    """A family of target sets; the empty intervention is always a member.

    ``len()`` / ``size`` do not count the empty intervention.
    """

    __slots__ = ("targets", "masks")

    def __init__(self, interventions: Iterable[Iterable[int]] = ()):
        targets = {frozenset(int(v) for v in t) for t in interventions}
        targets.add(frozenset())
        self.targets = frozenset(targets)
        self.masks = tuple(to_mask(t) for t in self.targets if t)

    @classmethod
    def atomic(cls, vertices: Iterable[int]) -> "InterventionSet":
        return cls([v] for v in vertices)

    @property
    def size(self) -> int:
        return len(self.targets) - 1

    def __len__(self) -> int:
        return self.size

    def nonempty(self) -> list:
        """Non-empty targets, sorted canonically."""
        return sorted((t for t in self.targets if t), key=lambda t: (len(t), sorted(t)))

    def __iter__(self):
        return iter(sorted(self.targets, key=lambda t: (len(t), sorted(t))))

    def __contains__(self, item) -> bool:
        return frozenset(item) in self.targets

    def __eq__(self, other):
        return isinstance(other, InterventionSet) and self.targets == other.targets

    def __hash__(self):
        return hash(self.targets)

    def __repr__(self):
        return f"InterventionSet({[sorted(t) for t in self.nonempty()]})"

    def is_atomic(self) -> bool:
        return all(len(t) <= 1 for t in self.targets)

    def max_target_size(self) -> int:
        return max(len(t) for t in self.targets)


def as_intervention_set(iv) -> InterventionSet:
    if iv is None:
        return InterventionSet()
    if isinstance(iv, InterventionSet):
        return iv
    fam = [frozenset(t) for t in iv]
    if frozenset() not in fam:
        raise ValueError("intervention set must contain the empty intervention")
    return InterventionSet(fam)


def project_to_component(iv, s: Iterable[int]) -> InterventionSet:
    """``{I & S : I in iv}``, keeping the empty intervention."""
    iv = as_intervention_set(iv)
    s = frozenset(s)
    return InterventionSet(t & s for t in iv.targets)


def restrict_to(iv, s: Iterable[int]) -> InterventionSet:
    """Project onto ``s`` and relabel to the ids used by ``PDGraph.induced(s)``."""
    keep = sorted(set(s))
    new = {old: i for i, old in enumerate(keep)}
    iv = as_intervention_set(iv)
    return InterventionSet([new[v] for v in t if v in new] for t in iv.targets)


def cuts(masks, u: int, v: int) -> bool:
    """Some target contains exactly one of ``u``, ``v``."""
    pair = (1 << u) | (1 << v)
    for m in masks:
        x = m & pair
        if x and x != pair:
            return True
    return False


@dataclass(frozen=True)
class EssentialGraph:
    graph: PDGraph
    source_dag: Dag
    interventions: InterventionSet

    @property
    def directed(self):
        return self.graph.directed

    @property
    def undirected(self):
        return self.graph.undirected

    @property
    def fully_directed(self) -> bool:
        return not self.graph.undirected


# -- Meek closure ------------------------------------------------------------

def _meek_fires(x: int, y: int, pa, ch, und, adj) -> bool:
    """Whether one of R1-R4 orients the line x - y as x -> y."""
    ybit = 1 << y
    # R1: c -> x - y, c not adjacent to y
    if pa[x] & ~adj[y] & ~ybit:
        return True
    # R2: x -> c -> y
    if ch[x] & pa[y]:
        return True
    # R3: x - c1 -> y <- c2 - x with c1, c2 non-adjacent
    common = und[x] & pa[y]
    if common & (common - 1):
        cs = list(bits(common))
        for i, c1 in enumerate(cs):
            if any(not adj[c1] >> c2 & 1 for c2 in cs[i + 1:]):
                return True
    # R4: x - d -> c -> y, c adjacent to x, d not adjacent to y
    for d in bits(und[x] & ~adj[y] & ~ybit):
        if ch[d] & pa[y] & adj[x]:
            return True
    return False


def meek_closure(g: PDGraph) -> PDGraph:
    """Apply Meek rules R1-R4 to a fixpoint.

    Lines are scanned in canonical order and the scan restarts after every
    orientation, so the trace is reproducible.
    """
    n = g.n
    pa = list(g.pa_mask)
    ch = list(g.ch_mask)
    und = list(g.und_mask)
    adj = list(g.adj_mask)
    lines = sorted(g.undirected)
    changed = True
    while changed:
        changed = False
        for idx, (u, v) in enumerate(lines):
            for x, y in ((u, v), (v, u)):
                if _meek_fires(x, y, pa, ch, und, adj):
                    und[x] &= ~(1 << y)
                    und[y] &= ~(1 << x)
                    ch[x] |= 1 << y
                    pa[y] |= 1 << x
                    del lines[idx]
                    changed = True
                    break
            if changed:
                break
    directed = set(g.directed)
    for x in range(n):
        for y in bits(ch[x]):
            directed.add((x, y))
    return PDGraph(n, frozenset(directed), frozenset(lines), g.names)


def seed_graph(d: Dag, iv: InterventionSet) -> PDGraph:
    """Skeleton of ``d`` with v-structure arcs and intervention-cut arcs oriented."""
    masks = iv.masks
    fixed = set()
    for b, a, c in v_structures(d):
        fixed.add((b, a))
        fixed.add((c, a))
    for u, v in d.directed:
        if cuts(masks, u, v):
            fixed.add((u, v))
    lines = [(min(u, v), max(u, v)) for u, v in d.directed if (u, v) not in fixed]
    return PDGraph(d.n, frozenset(fixed), frozenset(lines), d.names)


def i_essential_graph(d: Dag, iv=None) -> EssentialGraph:
    """The ``iv``-essential graph of ``d`` (observational when ``iv`` is ``None``)."""
    iv = as_intervention_set(iv)
    h = meek_closure(seed_graph(d, iv))
    verdict = check_i_essential(h, d, iv)
    if not verdict:
        raise EssentialGraphError(f"closure failed validation: {verdict.witness}")
    return EssentialGraph(h, d, iv)


def essential_graph(d: Dag) -> PDGraph:
    return i_essential_graph(d).graph


def fully_orients(d: Dag, iv) -> bool:
    return not i_essential_graph(d, iv).graph.undirected


# -- characterization ----------------------------------------------------------

def protection(h: PDGraph, a: int, b: int, iv) -> Verdict:
    """Strong protection of the arrow ``a -> b`` in ``h``.

    The witness names the first configuration found: ``cut``, ``parent-of-tail``
    (c -> a -> b), ``collider`` (a -> b <- c), ``shortcut`` (a -> c -> b) or
    ``split-parents`` (c1 -> b <- c2 with a - c1, a - c2).
    """
    if not h.has_arrow(a, b):
        raise GraphError(f"{a} -> {b} is not an arrow of the graph")
    iv = as_intervention_set(iv)
    if cuts(iv.masks, a, b):
        return Verdict(True, "cut")
    pa, ch, und, adj = h.pa_mask, h.ch_mask, h.und_mask, h.adj_mask
    abit, bbit = 1 << a, 1 << b
    if pa[a] & ~adj[b] & ~bbit:
        return Verdict(True, "parent-of-tail")
    if pa[b] & ~adj[a] & ~abit:
        return Verdict(True, "collider")
    if ch[a] & pa[b]:
        return Verdict(True, "shortcut")
    cs = list(bits(und[a] & pa[b]))
    for i, c1 in enumerate(cs):
        for c2 in cs[i + 1:]:
            if not adj[c1] >> c2 & 1:
                return Verdict(True, "split-parents")
    return Verdict(False, None)


def is_strongly_protected(h: PDGraph, a: int, b: int, iv) -> Verdict:
    return protection(h, a, b, iv)


def check_i_essential(h: PDGraph, d: Dag, iv) -> Verdict:
    """Test ``h`` against the characterization of the ``iv``-essential graph of ``d``.

    Conditions, checked in this order (the witness string starts with the tag):
    same skeleton and arrows agreeing with ``d``; ``item0`` every v-structure
    of ``d`` directed; ``item1`` chain graph with chordal chain components;
    ``item2`` no induced ``a -> b - c``; ``item3`` every intervention-cut edge
    directed; ``item4`` every arrow strongly protected (see ``protection``).
    """
    iv = as_intervention_set(iv)
    name = d.names
    if h.n != d.n or set(h.pairs()) != set(d.pairs()):
        return Verdict(False, "skeleton differs from the DAG")
    for u, v in sorted(h.directed):
        if (u, v) not in d.directed:
            return Verdict(False, f"arrow {name[u]}->{name[v]} disagrees with the DAG")
    for b, a, c in sorted(v_structures(d)):
        if not (h.has_arrow(b, a) and h.has_arrow(c, a)):
            return Verdict(False, f"item0: v-structure {name[b]}->{name[a]}<-{name[c]} not directed")
    if not is_chain_graph(h):
        return Verdict(False, "item1: not a chain graph")
    for comp in chain_components(h):
        if len(comp) > 3 and chordal_peo(h.induced(comp)) is None:
            return Verdict(False, "item1: chain component is not chordal")
    pa, und, adj = h.pa_mask, h.und_mask, h.adj_mask
    for b in range(h.n):
        for a in bits(pa[b]):
            bad = und[b] & ~adj[a] & ~(1 << a)
            if bad:
                c = next(bits(bad))
                return Verdict(False, f"item2: induced {name[a]}->{name[b]}-{name[c]}")
    masks = iv.masks
    for u, v in sorted(d.directed):
        if cuts(masks, u, v) and not h.has_arrow(u, v):
            return Verdict(False, f"item3: cut edge {name[u]}->{name[v]} not directed")
    for a, b in sorted(h.directed):
        if not protection(h, a, b, iv):
            return Verdict(False, f"item4: {name[a]}->{name[b]} not strongly protected")
    return Verdict(True, None)


# -- brute-force I-MEC oracle -------------------------------------------------

@lru_cache(maxsize=4096)
def _acyclic_orientations(n: int, pairs: tuple, budget: int) -> tuple:
    """All acyclic orientations of an undirected edge list, as arc tuples."""
    out = []
    reach = [1 << v for v in range(n)]  # reach[v]: vertices reachable from v

    def rec(i, reach, arcs):
        if i == len(pairs):
            if len(out) >= budget:
                raise BudgetExceeded(f"more than {budget} acyclic orientations")
            out.append(tuple(arcs))
            return
        u, v = pairs[i]
        for x, y in ((u, v), (v, u)):
            if reach[y] >> x & 1:
                continue
            new = list(reach)
            gain = new[y]
            for w in range(n):
                if new[w] >> x & 1:
                    new[w] |= gain
            arcs.append((x, y))
            rec(i + 1, new, arcs)
            arcs.pop()

    rec(0, reach, [])
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _signature(n: int, arcs: tuple, target_mask: int):
    """Skeleton and v-structures after deleting arcs into the targets."""
    kept = [(u, v) for u, v in arcs if not target_mask >> v & 1]
    pa = [0] * n
    adj = [0] * n
    for u, v in kept:
        pa[v] |= 1 << u
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    vs = []
    for a in range(n):
        ps = list(bits(pa[a]))
        for i, b in enumerate(ps):
            for c in ps[i + 1:]:
                if not adj[b] >> c & 1:
                    vs.append((b, a, c))
    return frozenset((min(u, v), max(u, v)) for u, v in kept), frozenset(vs)


def i_mec(d: Dag, iv=None, budget: int = DEFAULT_MEC_BUDGET) -> list:
    """Every DAG interventionally Markov equivalent to ``d``, canonically sorted.

    Two DAGs are equivalent when, for each target set, deleting the arcs into
    that set leaves them with equal skeletons and equal v-structures.
    """
    members = [Dag(d.n, frozenset(arcs), frozenset(), d.names)
               for arcs in _i_mec_arcs(d, iv, budget)]
    members.sort(key=lambda g: sorted(g.directed))
    return members


def _i_mec_arcs(d: Dag, iv, budget: int) -> list:
    iv = as_intervention_set(iv)
    masks = sorted(iv.masks + (0,))
    orientations = _acyclic_orientations(d.n, tuple(d.pairs()), budget)
    own = tuple(sorted(d.directed))
    ref = [_signature(d.n, own, m) for m in masks]
    return [arcs for arcs in orientations
            if all(_signature(d.n, arcs, m) == r for m, r in zip(masks, ref))]


def i_mec_union(d: Dag, iv=None, budget: int = DEFAULT_MEC_BUDGET) -> PDGraph:
    """Arrow ``u -> v`` where every member of the I-MEC agrees, a line elsewhere."""
    members = [set(arcs) for arcs in _i_mec_arcs(d, iv, budget)]
    directed, undirected = set(), set()
    for u, v in d.pairs():
        if all((u, v) in m for m in members):
            directed.add((u, v))
        elif all((v, u) in m for m in members):
            directed.add((v, u))
        else:
            undirected.add((u, v))
    return PDGraph(d.n, frozenset(directed), frozenset(undirected), d.names)


# -- intervention-set text format ---------------------------------------------

def parse_interventions(text: str, g: PDGraph) -> InterventionSet:
    """One intervention per line, comma-separated vertex names; ``#`` comments."""
    targets = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = [t.strip() for t in raw.split("#", 1)[0].split(",") if t.strip()]
        if not toks:
            continue
        try:
            targets.append([g.index(t) for t in toks])
        except ValueError:
            raise GraphError(f"line {lineno}: unknown vertex in {raw!r}") from None
    return InterventionSet(targets)


def write_interventions(iv: InterventionSet, g: PDGraph) -> str:
    lines = [",".join(g.names[v] for v in sorted(t)) for t in iv.nonempty()]
    return "".join(line + "\n" for line in lines)
