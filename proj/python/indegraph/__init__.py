"""Independent graph of Z_n: invariants, brute-force oracle and claim audits."""

from ._indegraph import (
    CapacityError,
    IndependentGraph,
    NotApplicable,
    audit,
    cf_clique_chromatic,
    cf_degree,
    cf_diameter,
    cf_edge_count,
    cf_girth,
    cf_invariants,
    cf_is_bipartite,
    cf_is_complete,
    cf_is_hamiltonian,
    cf_part_sizes,
    divisors,
    element_order,
    euler_phi,
    is_prime,
    order_decomposition,
    pc_chromatic,
    pc_clique,
    pc_edge_count,
    special_sets,
    sweep_report,
)

__all__ = [
    "CapacityError",
    "IndependentGraph",
    "NotApplicable",
    "audit",
    "cf_clique_chromatic",
    "cf_degree",
    "cf_diameter",
    "cf_edge_count",
    "cf_girth",
    "cf_invariants",
    "cf_is_bipartite",
    "cf_is_complete",
    "cf_is_hamiltonian",
    "cf_part_sizes",
    "divisors",
    "element_order",
    "euler_phi",
    "is_prime",
    "order_decomposition",
    "pc_chromatic",
    "pc_clique",
    "pc_edge_count",
    "special_sets",
    "sweep_report",
]
