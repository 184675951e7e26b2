"""
Explicit eigenvectors of D_n.

* lambda = -2: the Moebius vector on squarefree n with mu(n) = -1.
* lambda = -1: e_1 - e_n, since 1 and n are adjacent to everything.
* lambda = 0 on D_{p^u q^v} for u = v = 1 (mod 6): a 6-periodic kernel
  vector, together with the block identities behind it.

Every witness is checked by exact multiplication before it is returned.
"""

from typing import Dict, List, Optional, Tuple

import numpy as np
import structlog

from divgraph.arith import divisors, factor, mobius
from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import FactorizationType, KernelWitness, ObservationReport
from divgraph.exactla import kernel_residual_zero, shifted
from divgraph.exceptions import PreconditionError, VerificationError, check_guard
from divgraph.graph import TypeLike, build, build_from_integer, coerce_type

logger = structlog.get_logger("divgraph.spectra")

# one period of every column block of the kernel vector
KERNEL_PERIOD = (0, 1, 1, 0, -1, -1)
BLOCK_NAMES = ("A", "A'", "B", "B'", "C", "C'")


def _checked(matrix: np.ndarray, eigenvalue: int, vector: List[int], what: str) -> bool:
    if not kernel_residual_zero(shifted(matrix, eigenvalue), [vector]):
        logger.error("❌ Eigenvector residual is nonzero", witness=what, eigenvalue=eigenvalue)
        raise VerificationError(f"{what}: residual is nonzero", {"eigenvalue": eigenvalue})
    return True


def mobius_eigenvector(n: int, config: Optional[DivGraphConfig] = None) -> KernelWitness:
    """
    v_d = 0 for d in {1, n}, mu(d) otherwise, in ascending divisor order.

    Raises:
        PreconditionError: mu(n) != -1 or n is prime
    """
    if mobius(n) != -1:
        raise PreconditionError(f"mu({n}) must be -1")
    if len(factor(n).factors) < 2:
        raise PreconditionError(f"{n} is prime; the Moebius vector vanishes identically")

    g = build_from_integer(n, config)
    by_label = {label: k for k, label in enumerate(g.labels)}
    ordered = divisors(n)
    positions = [by_label[d] for d in ordered]
    vector = [0 if d in (1, n) else mobius(d) for d in ordered]

    adjacency = g.subgraph(positions).astype(np.int64)
    _checked(adjacency, -2, vector, "Moebius vector")
    permutation = [g.canonical_permutation[k] for k in positions]
    return KernelWitness(eigenvalue=-2, vector=vector, order="divisors ascending",
                         permutation=permutation, residual_zero=True)


def minus_one_eigenvector(t: TypeLike, config: Optional[DivGraphConfig] = None) -> KernelWitness:
    """
    w = e_1 - e_n in canonical order.

    Raises:
        PreconditionError: t = () (a single vertex)
    """
    g = build(coerce_type(t), config)
    if g.v < 2:
        raise PreconditionError("D_1 has a single vertex; -1 needs n >= 2")
    vector = [0] * g.v
    vector[g.bottom], vector[g.top] = 1, -1
    _checked(g.adjacency.astype(np.int64), -1, vector, "{1, n} vector")
    return KernelWitness(eigenvalue=-1, vector=vector, order="canonical",
                         permutation=list(range(g.v)), residual_zero=True)


def two_prime_type(u: int, v: int) -> FactorizationType:
    return FactorizationType.of(e for e in (u, v) if e > 0)


def two_prime_order(u: int, v: int) -> List[int]:
    """
    Order 1, q, ..., q^v, p, pq, ..., p^u q^v of D_{p^u q^v}.

    Position k*(v+1) + i holds p^k q^i; entry is its index in build(type).
    """
    perm = []
    for k in range(u + 1):
        for i in range(v + 1):
            if u <= v:
                perm.append(k + (u + 1) * i)
            else:
                perm.append(i + (v + 1) * k)
    return perm


def two_prime_matrix(u: int, v: int, config: Optional[DivGraphConfig] = None) -> np.ndarray:
    """Adjacency of D_{p^u q^v} in the order 1, q, ..., q^v, p, pq, ..., p^u q^v"""
    perm = two_prime_order(u, v)
    adjacency = build(two_prime_type(u, v), config).adjacency.astype(np.int64)
    return adjacency[np.ix_(perm, perm)]


def kernel_block(k: int, size: int) -> List[int]:
    """Column block k (p-exponent k) of X: entry i is s[(i - k) mod 6]"""
    return [KERNEL_PERIOD[(i - k) % 6] for i in range(size)]


def kernel_vector_two_prime_powers(u: int, v: int, config: Optional[DivGraphConfig] = None) -> KernelWitness:
    """
    X with M X = 0 on D_{p^u q^v} for u = v = 1 (mod 6).

    The column blocks cycle through A, A', B, B', C, C' and end on A, A'.

    Raises:
        PreconditionError: u or v not congruent to 1 mod 6
    """
    config = resolve_config(config)
    if u < 1 or v < 1 or u % 6 != 1 or v % 6 != 1:
        raise PreconditionError(f"need u = v = 1 (mod 6), got u={u}, v={v}")
    check_guard("two-prime-power graph", (u + 1) * (v + 1), config.max_vertices, "max_vertices")

    vector = [x for k in range(u + 1) for x in kernel_block(k, v + 1)]
    matrix = two_prime_matrix(u, v, config)
    _checked(matrix, 0, vector, "two-prime-power kernel vector")
    logger.debug("✅ Kernel vector verified", u=u, v=v)
    return KernelWitness(eigenvalue=0, vector=vector, order="1, q, ..., q^v, p, pq, ..., p^u q^v",
                         permutation=two_prime_order(u, v), residual_zero=True)


def six_case_blocks(v: int) -> Dict[str, np.ndarray]:
    return {name: np.array(kernel_block(k, v + 1), dtype=np.int64) for k, name in enumerate(BLOCK_NAMES)}


def six_case_identities(v: int, config: Optional[DivGraphConfig] = None) -> ObservationReport:
    """
    Block identities behind M X = 0, with U upper triangular ones and
    V = J - I of size v + 1:

        V A + U A' = U^T A + V A' = 0
        V B + U B' = U^T B + V B' = -2
        V A' + U B = U^T A' + V B = -2
        V B' + U C = U^T B' + V C = 0
        V C + U C' = U^T C + V C' = 2
        A + A' + B + B' + C + C' = 0

    Raises:
        PreconditionError: v not congruent to 1 mod 6
        VerificationError: an identity fails
    """
    config = resolve_config(config)
    if v < 1 or v % 6 != 1:
        raise PreconditionError(f"need v = 1 (mod 6), got {v}")
    check_guard("six-case block size", v, config.six_case_max_v, "six_case_max_v")

    size = v + 1
    blocks = six_case_blocks(v)
    upper = np.triu(np.ones((size, size), dtype=np.int64))
    other = np.ones((size, size), dtype=np.int64) - np.eye(size, dtype=np.int64)
    ones = np.ones(size, dtype=np.int64)

    cases: List[Tuple[str, str, str, int]] = [
        ("A", "A'", "VA+UA'", 0),
        ("B", "B'", "VB+UB'", -2),
        ("A'", "B", "VA'+UB", -2),
        ("B'", "C", "VB'+UC", 0),
        ("C", "C'", "VC+UC'", 2),
    ]
    checked, mismatches = [], []
    for first, second, label, value in cases:
        x, y = blocks[first], blocks[second]
        left = other @ x + upper @ y
        right = upper.T @ x + other @ y
        ok = bool(np.array_equal(left, value * ones) and np.array_equal(right, value * ones))
        checked.append({"identity": label, "value": value, "holds": ok})
        if not ok:
            mismatches.append({"identity": label, "left": left.tolist(), "right": right.tolist()})

    total = sum(blocks.values())
    ok = not total.any()
    checked.append({"identity": "sum of blocks", "value": 0, "holds": ok})
    if not ok:
        mismatches.append({"identity": "sum of blocks", "value": total.tolist()})

    if mismatches:
        logger.error("❌ Six-case identities failed", v=v, failures=len(mismatches))
        raise VerificationError(f"six-case identities failed for v={v}", {"mismatches": mismatches})
    return ObservationReport(name=f"six-case-identities(v={v})", holds=True, checked=checked)
