"""Exact optimal atomic intervention size by exhaustive subset search."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .essential import InterventionSet, essential_graph, fully_orients
from .graph import Dag, chain_components

DEFAULT_ORACLE_BUDGET = 10 ** 7


@dataclass(frozen=True)
class OracleResult:
    optimal_size: int | None
    witness_set: tuple | None
    subsets_checked: int
    budget_hit: bool


def _component_optimum(sub: Dag, budget: int):
    """Smallest (then lexicographically first) fully orienting vertex subset."""
    checked = 0
    for size in range(sub.n + 1):
        for combo in combinations(range(sub.n), size):
            if checked >= budget:
                return None, checked
            checked += 1
            if fully_orients(sub, InterventionSet.atomic(combo)):
                return combo, checked
    raise AssertionError("intervening on every vertex always orients everything")


def optimal_atomic_size(d: Dag, budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    """Search each chain component of the essential graph separately.

    Subsets are tried by increasing size and lexicographically within a size;
    ``budget`` caps the total number of ``fully_orients`` calls.
    """
    witness = []
    checked = 0
    for comp in chain_components(essential_graph(d)):
        if len(comp) == 1:
            continue
        comp = sorted(comp)
        best, used = _component_optimum(d.induced(comp), budget - checked)
        checked += used
        if best is None:
            return OracleResult(None, None, checked, True)
        witness.extend(comp[i] for i in best)
    return OracleResult(len(witness), tuple(sorted(witness)), checked, False)
