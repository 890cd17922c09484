"""Lower bounds on the number of interventions needed to orient a MEC.

All arithmetic is in exact integers. For multi-component essential graphs the
clique-number bound is summed over chain components.
"""
from __future__ import annotations

from dataclasses import dataclass

from .essential import essential_graph
from .graph import Dag, GraphError, PDGraph, chain_components, maximal_cliques


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    r: int
    r_star: int
    omega: int
    clique_count: tuple   # r(S) for each chain component
    per_component: tuple  # (|S|, r(S), omega(S)) for each chain component
    our_bound: int
    prior_bound: int

    CSV_HEADER = "n,r,r_star,omega,our_bound,prior_bound"

    def csv_row(self) -> str:
        return f"{self.n},{self.r},{self.r_star},{self.omega},{self.our_bound},{self.prior_bound}"

    @property
    def half_gap(self) -> int:
        """ceil((n - r) / 2)."""
        return ceil_div(self.n - self.r, 2)

    def multi_node_lower(self, k: int) -> int:
        if k < 1:
            raise ValueError("k must be at least 1")
        return ceil_div(self.half_gap, k)

    def multi_node_upper(self, k: int) -> int:
        if k < 1:
            raise ValueError("k must be at least 1")
        return ceil_div((self.n - self.r) // 2, k) + ceil_div(self.r_star, k)


def component_cliques(e: PDGraph):
    """``(component, maximal cliques)`` for each chain component of ``e``."""
    out = []
    for comp in chain_components(e):
        sub = e.induced(comp)
        out.append((comp, maximal_cliques(PDGraph(sub.n, frozenset(), sub.undirected))))
    return out


def universal_lower_bound(d: Dag) -> BoundsReport:
    per = []
    for comp, cliques in component_cliques(essential_graph(d)):
        per.append((len(comp), len(cliques), max(len(c) for c in cliques)))
    return BoundsReport(
        n=d.n,
        r=sum(r for _, r, _ in per),
        r_star=sum(r for s, r, _ in per if s > 1),
        omega=max((w for _, _, w in per), default=0),
        clique_count=tuple(r for _, r, _ in per),
        per_component=tuple(per),
        our_bound=sum(ceil_div(s - r, 2) for s, r, _ in per),
        prior_bound=sum(w // 2 for _, _, w in per),
    )


def prior_lower_bound(d: Dag) -> int:
    return universal_lower_bound(d).prior_bound


def multi_node_lower_bound(d: Dag, k: int) -> int:
    return universal_lower_bound(d).multi_node_lower(k)


def clique_count_gap(g: PDGraph) -> tuple:
    """``(n - #maximal cliques, omega - 1)`` for a chordal undirected graph."""
    if g.directed:
        raise GraphError("clique_count_gap expects an undirected graph")
    cliques = maximal_cliques(g)
    omega = max((len(c) for c in cliques), default=0)
    return g.n - len(cliques), omega - 1


def chordal_bounds(g: PDGraph) -> tuple:
    """``(ceil((n - #cliques) / 2), floor(omega / 2))`` for a chordal graph."""
    gap, omega_minus_one = clique_count_gap(g)
    return ceil_div(gap, 2), (omega_minus_one + 1) // 2
