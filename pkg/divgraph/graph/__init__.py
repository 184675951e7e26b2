"""
Divisibility graphs D_n: construction, structural invariants, planarity, DOT export
"""

from .model import (
    DivGraph,
    TypeLike,
    build,
    build_from_integer,
    coerce_type,
    comparable,
    enumerate_vectors,
    vector_index,
)
from .structure import (
    counts,
    edge_count_by_divisor_sums,
    degree,
    delta,
    degree_vector,
    degree_distribution,
    min_degree_analysis,
    minimal_degree_chain,
    close,
    is_chain,
    lucas_adjacency,
    distance,
    middle_graph,
    connectivity_checks,
)
from .cliques import (
    clique_number,
    independence_number,
    omega_coloring,
    universal_vertex_eigenvectors,
    maximum_clique_size,
    maximum_independent_set_size,
)
from .planarity import PLANAR_TYPES, planarity_class, planarity_oracle, witness_holds
from .export import divisor_labels, field_labels, to_dot

__all__ = [
    "DivGraph",
    "TypeLike",
    "build",
    "build_from_integer",
    "coerce_type",
    "comparable",
    "enumerate_vectors",
    "vector_index",
    "counts",
    "edge_count_by_divisor_sums",
    "degree",
    "delta",
    "degree_vector",
    "degree_distribution",
    "min_degree_analysis",
    "minimal_degree_chain",
    "close",
    "is_chain",
    "lucas_adjacency",
    "distance",
    "middle_graph",
    "connectivity_checks",
    "clique_number",
    "independence_number",
    "omega_coloring",
    "universal_vertex_eigenvectors",
    "maximum_clique_size",
    "maximum_independent_set_size",
    "PLANAR_TYPES",
    "planarity_class",
    "planarity_oracle",
    "witness_holds",
    "divisor_labels",
    "field_labels",
    "to_dot",
]
