"""
Finite posets stored as strict-less boolean matrices.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from divgraph.exceptions import InvalidInputError

Scalar = Union[int, Fraction]
VertexFunction = Tuple[Scalar, ...]


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """
    Elements 0..m-1 with less[i, j] true iff i < j.

    The relation is checked for irreflexivity, antisymmetry and
    transitivity on construction.
    """

    less: np.ndarray
    name: str = field(default="")

    def __post_init__(self):
        less = np.asarray(self.less, dtype=bool)
        if less.ndim != 2 or less.shape[0] != less.shape[1]:
            raise InvalidInputError(f"strict-less relation must be square, got shape {less.shape}")
        if less.diagonal().any():
            raise InvalidInputError("strict-less relation must be irreflexive")
        if (less & less.T).any():
            raise InvalidInputError("strict-less relation must be antisymmetric")
        li = less.astype(np.int64)
        if ((li @ li > 0) & ~less).any():
            raise InvalidInputError("strict-less relation must be transitive")
        less.setflags(write=False)
        object.__setattr__(self, "less", less)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[Tuple[int, int]], name: str = "") -> "FinitePoset":
        """Poset generated by the given i < j pairs (transitive closure taken)"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(size))
        graph.add_edges_from(pairs)
        if not nx.is_directed_acyclic_graph(graph):
            raise InvalidInputError("generating pairs contain a cycle")
        closure = nx.transitive_closure_dag(graph)
        less = np.zeros((size, size), dtype=bool)
        for i, j in closure.edges:
            less[i, j] = True
        return cls(less, name)

    @property
    def size(self) -> int:
        return self.less.shape[0]

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return np.array_equal(self.less, other.less)

    def __hash__(self) -> int:
        return hash(self.less.tobytes())

    def leq(self, i: int, j: int) -> bool:
        return i == j or bool(self.less[i, j])

    def below(self, i: int) -> List[int]:
        return [int(k) for k in np.flatnonzero(self.less[:, i])]

    def above(self, i: int) -> List[int]:
        return [int(k) for k in np.flatnonzero(self.less[i, :])]

    @property
    def leq_matrix(self) -> np.ndarray:
        return self.less | np.eye(self.size, dtype=bool)

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FinitePoset{label} size={self.size} relations={int(self.less.sum())}>"


def chain(k: int) -> FinitePoset:
    """Total order 0 < 1 < ... < k-1"""
    return FinitePoset(np.triu(np.ones((k, k), dtype=bool), 1), name=f"chain({k})")


def antichain(k: int) -> FinitePoset:
    return FinitePoset(np.zeros((k, k), dtype=bool), name=f"antichain({k})")


def product(p: FinitePoset, q: FinitePoset) -> FinitePoset:
    """
    Componentwise order on P x Q.

    Element (i, j) has index i + |P| * j.
    """
    leq = np.kron(q.leq_matrix, p.leq_matrix)
    np.fill_diagonal(leq, False)
    name = f"{p.name or 'P'} x {q.name or 'Q'}"
    return FinitePoset(leq, name=name)


def power(p: FinitePoset, k: int) -> FinitePoset:
    """P x P x ... x P (k factors); the one-element poset for k = 0"""
    result = chain(1)
    for _ in range(k):
        result = product(result, p) if result.size > 1 else p
    return result


def s0_poset() -> FinitePoset:
    """
    {0,1}^2 with componentwise order.

    Index of (a1, a2) is a1 + 2 * a2: (0,0), (1,0), (0,1), (1,1).
    """
    s0 = product(chain(2), chain(2))
    return FinitePoset(s0.less, name="S0")


def divisor_poset(exponents: Sequence[int]) -> FinitePoset:
    """Product of chains of lengths a_i + 1, coordinate 1 fastest"""
    result = chain(1)
    for a in exponents:
        result = product(result, chain(a + 1)) if result.size > 1 else chain(a + 1)
    return FinitePoset(result.less, name="Div(" + ",".join(str(a) for a in exponents) + ")")


def comparability_graph(p: FinitePoset) -> np.ndarray:
    """Symmetric 0/1 adjacency joining strictly comparable elements"""
    return (p.less | p.less.T).astype(np.uint8)


def h_vector() -> VertexFunction:
    """h((0,0)) = h((1,1)) = 0, h((0,1)) = 1, h((1,0)) = -1, in S0 index order"""
    return (0, -1, 1, 0)


def tensor_lift(g: Sequence[Scalar], h: Sequence[Scalar], p: Optional[FinitePoset] = None,
                q: Optional[FinitePoset] = None) -> VertexFunction:
    """
    (g x h)(s, t) = g(s) * h(t), indexed as product(P, Q).

    Args:
        g: function on P
        h: function on Q
        p: P, to check the length of g (optional)
        q: Q, to check the length of h (optional)
    """
    if p is not None and len(g) != p.size:
        raise InvalidInputError(f"function has {len(g)} values for a poset of size {p.size}")
    if q is not None and len(h) != q.size:
        raise InvalidInputError(f"function has {len(h)} values for a poset of size {q.size}")
    return tuple(gs * ht for ht in h for gs in g)


def random_poset(size: int, rng: random.Random, density: Optional[float] = None) -> FinitePoset:
    """Transitive closure of a random DAG on 0..size-1 (edges i -> j only for i < j)"""
    density = rng.uniform(0.1, 0.6) if density is None else density
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size) if rng.random() < density]
    return FinitePoset.from_pairs(size, pairs, name=f"random({size})")
