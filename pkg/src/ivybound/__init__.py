"""Universal lower bounds and intervention designs for orienting causal DAGs."""
from .bounds import (BoundsReport, clique_count_gap, multi_node_lower_bound, prior_lower_bound,
                     universal_lower_bound)
from .design import (DesignResult, bounded_size_intervention_set, single_multinode_intervention,
                     sink_complement_interventions)
from .essential import (EssentialGraph, InterventionSet, check_i_essential, fully_orients,
                        i_essential_graph, i_mec, i_mec_union, is_strongly_protected,
                        project_to_component)
from .graph import (Dag, PDGraph, chain_components, is_chain_graph, is_chordal, make_dag,
                    maximal_cliques, parse_edge_list, read_dag, sink_nodes, skeleton,
                    v_structures, write_edge_list)
from .oracle import OracleResult, optimal_atomic_size
from .orderings import (CliqueBlockOrdering, RepairStep, cbsp_ordering, check_p1, check_p2,
                        clique_block_ordering, is_a_clique_block_ordering)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "clique_count_gap",
    "multi_node_lower_bound",
    "prior_lower_bound",
    "universal_lower_bound",
    "DesignResult",
    "bounded_size_intervention_set",
    "single_multinode_intervention",
    "sink_complement_interventions",
    "EssentialGraph",
    "InterventionSet",
    "check_i_essential",
    "fully_orients",
    "i_essential_graph",
    "i_mec",
    "i_mec_union",
    "is_strongly_protected",
    "project_to_component",
    "Dag",
    "PDGraph",
    "chain_components",
    "is_chain_graph",
    "is_chordal",
    "make_dag",
    "maximal_cliques",
    "parse_edge_list",
    "read_dag",
    "sink_nodes",
    "skeleton",
    "v_structures",
    "write_edge_list",
    "OracleResult",
    "optimal_atomic_size",
    "CliqueBlockOrdering",
    "RepairStep",
    "cbsp_ordering",
    "check_p1",
    "check_p2",
    "clique_block_ordering",
    "is_a_clique_block_ordering",
]
