"""
D_n as a comparability graph on exponent vectors.

build(t) enumerates the vectors of a factorization type in mixed-radix order
(coordinate 1 fastest, coordinates in nondecreasing exponent order).
build_from_integer(n) uses the coordinates of the factorization itself
(primes increasing) and carries the divisors as labels.
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import structlog

from divgraph.arith import factor
from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ExponentVector, FactorizationType
from divgraph.exceptions import InvalidInputError, check_guard

logger = structlog.get_logger("divgraph.graph")

TypeLike = Union[FactorizationType, Sequence[int], str]


def coerce_type(t: TypeLike) -> FactorizationType:
    """Accept a FactorizationType, a sequence of parts or text like '2,1'"""
    if isinstance(t, FactorizationType):
        return t
    try:
        if isinstance(t, str):
            return FactorizationType.parse(t)
        return FactorizationType.of(t)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"invalid factorization type {t!r}: {e}") from e


def enumerate_vectors(bounds: Sequence[int]) -> np.ndarray:
    """All vectors 0 <= x_i <= bounds_i, shape (v, d), coordinate 1 fastest"""
    d = len(bounds)
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    shape = tuple(a + 1 for a in reversed(bounds))
    return np.indices(shape).reshape(d, -1)[::-1].T.astype(np.int64)


def vector_index(bounds: Sequence[int], x: Sequence[int]) -> int:
    """Mixed-radix index sum x_i * prod_{j<i}(a_j + 1)"""
    index, radix = 0, 1
    for a, xi in zip(bounds, x):
        index += xi * radix
        radix *= a + 1
    return index


def validate_vector(bounds: Sequence[int], x: Sequence[int]) -> ExponentVector:
    x = tuple(int(c) for c in x)
    if len(x) != len(bounds):
        raise InvalidInputError(f"exponent vector {x} has length {len(x)}, expected {len(bounds)}")
    if any(c < 0 or c > a for c, a in zip(x, bounds)):
        raise InvalidInputError(f"exponent vector {x} out of range for bounds {tuple(bounds)}")
    return x


def comparable(x: Sequence[int], y: Sequence[int]) -> bool:
    """x != y and one divides the other"""
    if tuple(x) == tuple(y):
        return False
    return all(a <= b for a, b in zip(x, y)) or all(b <= a for a, b in zip(x, y))


@dataclass(frozen=True, eq=False)
class DivGraph:
    """
    Immutable divisibility graph.

    `bounds` are the coordinate maxima in vertex-vector order; they equal
    ftype.exponents for graphs built from a type and the factorization
    exponents (primes increasing) for graphs built from an integer.
    """

    ftype: FactorizationType
    bounds: Tuple[int, ...]
    primes: Optional[Tuple[int, ...]] = None
    config: Optional[DivGraphConfig] = field(default=None, repr=False)

    @property
    def v(self) -> int:
        return prod(a + 1 for a in self.bounds)

    @property
    def d(self) -> int:
        return len(self.bounds)

    @cached_property
    def exponents(self) -> np.ndarray:
        return enumerate_vectors(self.bounds)

    @cached_property
    def vertices(self) -> List[ExponentVector]:
        return [tuple(int(c) for c in row) for row in self.exponents]

    @cached_property
    def weights(self) -> np.ndarray:
        """Omega of each vertex"""
        return self.exponents.sum(axis=1)

    @cached_property
    def labels(self) -> Optional[List[int]]:
        """Divisor values, available when built from an integer"""
        if self.primes is None:
            return None
        return [prod(p ** e for p, e in zip(self.primes, x)) for x in self.vertices]

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric 0/1 adjacency (uint8)"""
        config = resolve_config(self.config)
        check_guard("dense adjacency", self.v, config.max_vertices, "max_vertices")
        x = self.exponents
        leq = np.ones((self.v, self.v), dtype=bool)
        for i in range(self.d):
            col = x[:, i]
            leq &= col[:, None] <= col[None, :]
        adj = leq | leq.T
        np.fill_diagonal(adj, False)
        return adj.astype(np.uint8)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return self.v - 1

    def index(self, x: Sequence[int]) -> int:
        return vector_index(self.bounds, validate_vector(self.bounds, x))

    def resolve(self, vertex: Union[int, Sequence[int]]) -> int:
        """Vertex index from an index or an exponent vector"""
        if isinstance(vertex, (int, np.integer)):
            if not 0 <= vertex < self.v:
                raise InvalidInputError(f"vertex index {vertex} out of range 0..{self.v - 1}")
            return int(vertex)
        return self.index(vertex)

    def label_of(self, vertex: int) -> int:
        if self.labels is None:
            raise InvalidInputError("graph was built from a type and carries no divisor labels")
        return self.labels[vertex]

    @cached_property
    def coordinate_order(self) -> List[int]:
        """Vector coordinates sorted into canonical order: by exponent, then prime"""
        keys = [(a, self.primes[i] if self.primes else i) for i, a in enumerate(self.bounds)]
        return sorted(range(self.d), key=lambda i: keys[i])

    @cached_property
    def canonical_permutation(self) -> List[int]:
        """perm[k] = index of vertex k in build(self.ftype)"""
        order = self.coordinate_order
        canonical_bounds = [self.bounds[i] for i in order]
        return [vector_index(canonical_bounds, [x[i] for i in order]) for x in self.vertices]

    def to_networkx(self) -> nx.Graph:
        return nx.from_numpy_array(self.adjacency)

    def subgraph(self, indices: Sequence[int]) -> np.ndarray:
        idx = np.asarray(indices, dtype=np.int64)
        return self.adjacency[np.ix_(idx, idx)]

    def __repr__(self) -> str:
        return f"<DivGraph type={self.ftype} v={self.v}>"


def build(t: TypeLike, config: Optional[DivGraphConfig] = None) -> DivGraph:
    """
    D_n for the factorization type t.

    Raises:
        SizeGuardError: d > build_max_parts or v > build_max_vertices
    """
    config = resolve_config(config)
    ftype = coerce_type(t)
    check_guard("factorization type parts", ftype.d, config.build_max_parts, "build_max_parts")
    check_guard("graph", ftype.vertex_count, config.build_max_vertices, "build_max_vertices")
    logger.debug("🏗️ Building divisibility graph", type=str(ftype), v=ftype.vertex_count)
    return DivGraph(ftype=ftype, bounds=ftype.exponents, config=config)


def build_from_integer(n: int, config: Optional[DivGraphConfig] = None) -> DivGraph:
    """D_n with divisor labels, coordinates following the primes of n in increasing order"""
    config = resolve_config(config)
    factorization = factor(n)
    exponents = tuple(f.exponent for f in factorization.factors)
    ftype = FactorizationType.of(exponents)
    check_guard("factorization type parts", ftype.d, config.build_max_parts, "build_max_parts")
    check_guard("graph", ftype.vertex_count, config.build_max_vertices, "build_max_vertices")
    primes = tuple(f.prime for f in factorization.factors)
    logger.debug("🏗️ Building divisibility graph", n=n, type=str(ftype))
    return DivGraph(ftype=ftype, bounds=exponents, primes=primes, config=config)
