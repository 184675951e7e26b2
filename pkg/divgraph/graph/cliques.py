"""
Cliques, antichains and the Omega colouring.

Maximum cliques of D_n are maximal divisor chains and maximum independent
sets are middle layers; for small graphs both are confirmed against an
exact branch-and-bound search (networkx.max_weight_clique).
"""

from typing import List, Optional

import networkx as nx
import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import CliqueWitness, Coloring, ExponentVector, IndependenceWitness, KernelWitness
from divgraph.exactla import kernel_residual_zero, shifted
from divgraph.exceptions import VerificationError

from .model import DivGraph, TypeLike, build, coerce_type

logger = structlog.get_logger("divgraph.graph")


def maximum_clique_size(adjacency: np.ndarray) -> int:
    """Exact maximum clique size by branch and bound"""
    if adjacency.shape[0] == 0:
        return 0
    clique, _ = nx.max_weight_clique(nx.from_numpy_array(adjacency), weight=None)
    return len(clique)


def maximum_independent_set_size(adjacency: np.ndarray) -> int:
    complement = 1 - adjacency
    np.fill_diagonal(complement, 0)
    return maximum_clique_size(complement)


def divisor_chain(exponents) -> List[ExponentVector]:
    """1 = x_0 | x_1 | ... | n raising coordinate 1 to its maximum, then coordinate 2, ..."""
    current = [0] * len(exponents)
    chain = [tuple(current)]
    for i, a in enumerate(exponents):
        for _ in range(a):
            current[i] += 1
            chain.append(tuple(current))
    return chain


def clique_number(t: TypeLike, config: Optional[DivGraphConfig] = None) -> CliqueWitness:
    """
    omega(D_n) = 1 + Omega(n) with a maximal divisor chain as witness.

    Raises:
        VerificationError: the chain is not a clique or brute force disagrees
    """
    config = resolve_config(config)
    g = build(coerce_type(t), config)
    chain = divisor_chain(g.ftype.exponents)
    indices = [g.index(x) for x in chain]
    sub = g.subgraph(indices)
    if int(sub.sum()) != len(indices) * (len(indices) - 1):
        raise VerificationError("divisor chain is not a clique", {"type": list(g.ftype.exponents)})

    brute = None
    if g.v <= config.brute_force_max_vertices:
        brute = maximum_clique_size(g.adjacency)
        if brute != len(chain):
            logger.error("❌ Clique number mismatch", type=str(g.ftype), formula=len(chain), brute_force=brute)
            raise VerificationError("clique number disagrees with exhaustive search",
                                    {"formula": len(chain), "brute_force": brute})
    return CliqueWitness(size=len(chain), chain=chain, indices=indices, brute_force_size=brute)


def independence_number(t: TypeLike, config: Optional[DivGraphConfig] = None) -> IndependenceWitness:
    """
    alpha(D_n) = number of divisors m with Omega(m) = floor(Omega(n) / 2).

    Raises:
        VerificationError: the layer is not independent or brute force disagrees
    """
    config = resolve_config(config)
    g = build(coerce_type(t), config)
    middle = g.ftype.big_omega // 2
    indices = [int(k) for k in np.flatnonzero(g.weights == middle)]
    if g.subgraph(indices).any():
        raise VerificationError("middle layer is not independent", {"type": list(g.ftype.exponents)})

    brute = None
    if g.v <= config.brute_force_max_vertices:
        brute = maximum_independent_set_size(g.adjacency)
        if brute != len(indices):
            logger.error("❌ Independence number mismatch", type=str(g.ftype),
                         formula=len(indices), brute_force=brute)
            raise VerificationError("independence number disagrees with exhaustive search",
                                    {"formula": len(indices), "brute_force": brute})
    return IndependenceWitness(size=len(indices), antichain=[g.vertices[k] for k in indices],
                               indices=indices, brute_force_size=brute)


def omega_coloring(t: TypeLike, config: Optional[DivGraphConfig] = None) -> Coloring:
    """
    c(m) = Omega(m): proper, with exactly 1 + Omega(n) colours.

    Raises:
        VerificationError: an edge is monochromatic
    """
    g = build(coerce_type(t), config)
    colors = [int(c) for c in g.weights]
    w = g.weights
    proper = not np.any(g.adjacency.astype(bool) & (w[:, None] == w[None, :]))
    if not proper:
        raise VerificationError("Omega colouring is not proper", {"type": list(g.ftype.exponents)})
    return Coloring(colors=colors, num_colors=len(set(colors)), proper=proper)


def universal_vertex_eigenvectors(g: DivGraph) -> List[KernelWitness]:
    """
    e_{x0} - e_x for the vertices x adjacent to everything.

    The universal vertices form a clique whose complement sees each of them
    identically, so every such difference is a -1 eigenvector.
    """
    adjacency = g.adjacency.astype(np.int64)
    universal = [int(k) for k in np.flatnonzero(adjacency.sum(axis=1) == g.v - 1)]
    witnesses = []
    if len(universal) < 2:
        return witnesses
    x0 = universal[0]
    for x in universal[1:]:
        vector = [0] * g.v
        vector[x0], vector[x] = 1, -1
        residual_zero = kernel_residual_zero(shifted(adjacency, -1), [vector])
        if not residual_zero:
            raise VerificationError("universal-vertex difference is not a -1 eigenvector", {"x": x})
        witnesses.append(KernelWitness(eigenvalue=-1, vector=vector, order="canonical",
                                       permutation=list(range(g.v)), residual_zero=True))
    return witnesses
