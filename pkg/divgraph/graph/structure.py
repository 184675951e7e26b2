"""
Closed-form structural invariants of D_n: vertex and edge counts, degrees,
minimal-degree vertices, distances and connectivity.
"""

from collections import defaultdict
from math import comb, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ConnectivityReport, DegreeProfile, ExponentVector
from divgraph.exceptions import InvalidInputError, VerificationError, check_guard

from .model import DivGraph, TypeLike, build, coerce_type, enumerate_vectors, validate_vector

logger = structlog.get_logger("divgraph.graph")

Vertex = Union[int, Sequence[int]]


def counts(t: TypeLike) -> Tuple[int, int]:
    """
    (v, e) with v = prod(a_i + 1) and e = v * (prod(a_i + 2) / 2^d - 1).

    The fraction is always integral; it is evaluated in exact arithmetic.
    """
    ftype = coerce_type(t)
    v = ftype.vertex_count
    numerator = v * prod(a + 2 for a in ftype.exponents)
    scale = 2 ** ftype.d
    if numerator % scale:
        raise VerificationError("edge count is not integral", {"type": list(ftype.exponents)})
    return v, numerator // scale - v


def edge_count_by_divisor_sums(t: TypeLike) -> int:
    """e = sum_{b | n} d(b) - v, counting pairs b | c with b != c"""
    ftype = coerce_type(t)
    pairs = prod(comb(a + 2, 2) for a in ftype.exponents)
    return pairs - ftype.vertex_count


def degree(t: TypeLike, x: Sequence[int]) -> int:
    """f(x) = prod(a_i + 1 - x_i) + prod(x_i + 1) - 2"""
    ftype = coerce_type(t)
    x = validate_vector(ftype.exponents, x)
    return prod(a + 1 - xi for a, xi in zip(ftype.exponents, x)) + prod(xi + 1 for xi in x) - 2


def delta(t: TypeLike, x: Sequence[int], i: int) -> int:
    """
    Delta_i(x) = prod_{j != i}(x_j + 1) - prod_{j != i}(a_j + 1 - x_j).

    Args:
        t: factorization type
        x: exponent vector
        i: coordinate, 1-based
    """
    ftype = coerce_type(t)
    x = validate_vector(ftype.exponents, x)
    if not 1 <= i <= ftype.d:
        raise InvalidInputError(f"coordinate index {i} out of range 1..{ftype.d}")
    rest = [(a, xi) for j, (a, xi) in enumerate(zip(ftype.exponents, x), start=1) if j != i]
    return prod(xi + 1 for _, xi in rest) - prod(a + 1 - xi for a, xi in rest)


def degree_vector(t: TypeLike) -> np.ndarray:
    """Degrees of all vertices in canonical order, from the closed form"""
    ftype = coerce_type(t)
    x = enumerate_vectors(ftype.exponents)
    a = np.asarray(ftype.exponents, dtype=np.int64)
    return np.prod(a + 1 - x, axis=1) + np.prod(x + 1, axis=1) - 2


def degree_distribution(t: TypeLike) -> Dict[int, List[ExponentVector]]:
    """degree -> vertices having it, degrees ascending"""
    ftype = coerce_type(t)
    buckets: Dict[int, List[ExponentVector]] = defaultdict(list)
    vectors = enumerate_vectors(ftype.exponents)
    for row, deg in zip(vectors, degree_vector(ftype)):
        buckets[int(deg)].append(tuple(int(c) for c in row))
    return dict(sorted(buckets.items()))


def _is_extremal(a: Sequence[int], x: Sequence[int]) -> bool:
    return all(xi in (0, ai) for ai, xi in zip(a, x))


def close(x: Sequence[int], y: Sequence[int]) -> bool:
    """x and y differ by exactly one in exactly one coordinate"""
    steps = [abs(xi - yi) for xi, yi in zip(x, y)]
    return len(x) == len(y) and sum(steps) == 1


def is_chain(vectors: Sequence[Sequence[int]]) -> bool:
    """Consecutive members are close"""
    return all(close(x, y) for x, y in zip(vectors, vectors[1:]))


def minimal_degree_chain(t: TypeLike, x: Sequence[int]) -> List[ExponentVector]:
    """
    Constant-degree chain from x to an extremal vertex.

    Each nonextremal coordinate i of x is walked down to 0 one step at a
    time. The degree stays fixed along the walk iff Delta_i vanishes there.

    Args:
        t: factorization type
        x: exponent vector of a minimal-degree vertex

    Returns:
        The chain x = x_1, ..., x_k with x_k extremal

    Raises:
        VerificationError: a nonextremal coordinate has Delta_i != 0
    """
    ftype = coerce_type(t)
    a = ftype.exponents
    current = list(validate_vector(a, x))
    chain: List[ExponentVector] = [tuple(current)]
    for i, ai in enumerate(a):
        if current[i] in (0, ai):
            continue
        step = delta(ftype, current, i + 1)
        if step != 0:
            raise VerificationError("stability fails at a nonextremal coordinate",
                                    {"type": list(a), "vertex": list(current), "coordinate": i + 1,
                                     "delta": step})
        while current[i] > 0:
            current[i] -= 1
            chain.append(tuple(current))
    return chain


def min_degree_analysis(t: TypeLike) -> DegreeProfile:
    """
    Minimal degree, its minimizers and the extremal-vertex claims.

    Checks that some minimizer is extremal, that Delta_i vanishes at every
    nonextremal coordinate of every minimizer, that every minimizer is
    joined to an extremal minimizer by a chain of minimal-degree vertices,
    and that the extremal minimizers are exactly the extremal vertices
    minimizing prod_{i in A}(a_i + 1) + prod_{j in B}(a_j + 1) with
    A = {x_i = a_i}, B = {x_j = 0}. The minimum degree must equal that
    smallest sum minus 2.

    Raises:
        VerificationError: any of the claims fails
    """
    ftype = coerce_type(t)
    a = ftype.exponents
    vectors = [tuple(int(c) for c in row) for row in enumerate_vectors(a)]
    degrees = [int(dg) for dg in degree_vector(ftype)]
    by_vector = dict(zip(vectors, degrees))
    low = min(degrees)
    minimizers = [x for x, dg in zip(vectors, degrees) if dg == low]
    extremal_minimizers = [x for x in minimizers if _is_extremal(a, x)]

    stability = all(
        delta(ftype, x, i + 1) == 0
        for x in minimizers
        for i, (ai, xi) in enumerate(zip(a, x))
        if 0 < xi < ai
    )

    chains: List[List[ExponentVector]] = []
    chains_hold = stability
    if stability:
        for x in minimizers:
            chain = minimal_degree_chain(ftype, x)
            chains.append(chain)
            chains_hold = chains_hold and (
                is_chain(chain)
                and _is_extremal(a, chain[-1])
                and all(by_vector[y] == low for y in chain)
            )

    def set_cost(x: ExponentVector) -> int:
        top = prod(ai + 1 for ai, xi in zip(a, x) if xi == ai)
        bottom = prod(ai + 1 for ai, xi in zip(a, x) if xi == 0)
        return top + bottom

    extremal = [x for x in vectors if _is_extremal(a, x)]
    best = min(set_cost(x) for x in extremal)
    criterion = (
        sorted(x for x in extremal if set_cost(x) == best) == sorted(extremal_minimizers)
        and low == best - 2
    )

    if not extremal_minimizers or not stability or not chains_hold or not criterion:
        logger.error("❌ Minimal-degree claims failed", type=str(ftype),
                     extremal=bool(extremal_minimizers), stability=stability,
                     chains=chains_hold, criterion=criterion)
        raise VerificationError("minimal-degree analysis failed", {"type": list(a)})

    return DegreeProfile(
        type=list(a),
        degrees=degrees,
        min_degree=low,
        minimizers=minimizers,
        extremal_minimizers=extremal_minimizers,
        chains=chains,
        extremal_min_cost=best,
        stability_holds=stability,
        chains_hold=chains_hold,
        criterion_holds=criterion,
    )


def lucas_adjacency(k: int, config: Optional[DivGraphConfig] = None) -> np.ndarray:
    """
    2^k x 2^k matrix with entry (C(i, j) + C(j, i)) mod 2, C(i, j) = 0 for j > i.

    Binomial parities come from Pascal's triangle mod 2.
    """
    config = resolve_config(config)
    if k < 0:
        raise InvalidInputError(f"k must be nonnegative, got {k}")
    check_guard("Lucas adjacency exponent", k, config.lucas_max_k, "lucas_max_k")
    size = 2 ** k
    check_guard("Lucas adjacency", size, config.max_vertices, "max_vertices")
    pascal = np.zeros((size, size), dtype=np.uint8)
    pascal[0, 0] = 1
    for i in range(1, size):
        pascal[i, 0] = 1
        pascal[i, 1:] = pascal[i - 1, 1:] ^ pascal[i - 1, :-1]
    return (pascal ^ pascal.T).astype(np.uint8)


def distance(g: DivGraph, x: Vertex, y: Vertex) -> int:
    """0 if x = y, 1 if adjacent, otherwise 2 through a common neighbour"""
    i, j = g.resolve(x), g.resolve(y)
    if i == j:
        return 0
    adj = g.adjacency
    if adj[i, j]:
        return 1
    if np.any(adj[i] & adj[j]):
        return 2
    raise VerificationError("vertices at distance greater than 2", {"x": g.vertices[i], "y": g.vertices[j]})


def middle_graph(g: DivGraph) -> Tuple[np.ndarray, List[ExponentVector]]:
    """Induced subgraph on every vertex except 1 and n"""
    keep = list(range(1, g.v - 1))
    return g.subgraph(keep), [g.vertices[k] for k in keep]


def connectivity_checks(t: TypeLike, config: Optional[DivGraphConfig] = None) -> ConnectivityReport:
    """
    D_n is connected; D_n minus {1, n} is connected unless t = (1,1);
    D_n is bipartite iff t = (1) (or t = (), the single vertex).

    The middle graph of t = () and t = (1) has no vertices and counts as connected.

    Raises:
        VerificationError: a computed property contradicts the claims
    """
    ftype = coerce_type(t)
    g = build(ftype, config)
    graph = g.to_networkx()
    connected = nx.is_connected(graph)
    middle, _ = middle_graph(g)
    middle_connected = middle.shape[0] == 0 or nx.is_connected(nx.from_numpy_array(middle))
    bipartite = nx.is_bipartite(graph)

    expected_middle = ftype.exponents != (1, 1)
    expected_bipartite = ftype.exponents in ((), (1,))
    if not connected or middle_connected != expected_middle or bipartite != expected_bipartite:
        logger.error("❌ Connectivity claims failed", type=str(ftype), connected=connected,
                     middle_connected=middle_connected, bipartite=bipartite)
        raise VerificationError("connectivity claims failed", {"type": list(ftype.exponents)})

    return ConnectivityReport(type=list(ftype.exponents), connected=connected,
                              middle_connected=middle_connected, bipartite=bipartite)
