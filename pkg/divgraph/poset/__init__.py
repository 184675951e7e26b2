"""
Finite posets, comparability graphs, products and the S0 tensor lift
"""

from .finite import (
    FinitePoset,
    VertexFunction,
    chain,
    antichain,
    product,
    power,
    s0_poset,
    divisor_poset,
    comparability_graph,
    h_vector,
    tensor_lift,
    random_poset,
)
from .lift import integer_eigenspaces, verify_poset_lift, verify_poset_squared_lift

__all__ = [
    "FinitePoset",
    "VertexFunction",
    "chain",
    "antichain",
    "product",
    "power",
    "s0_poset",
    "divisor_poset",
    "comparability_graph",
    "h_vector",
    "tensor_lift",
    "random_poset",
    "integer_eigenspaces",
    "verify_poset_lift",
    "verify_poset_squared_lift",
]
