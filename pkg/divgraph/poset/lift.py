"""
Tensor lift of eigenvectors from D_S to D_{S x S0}, and the characteristic
polynomial divisibility that follows from it.
"""

from typing import Dict, List, Optional

import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import PosetLiftReport
from divgraph.exactla import (
    IntPolynomial,
    charpoly,
    kernel_residual_zero,
    poly_divides,
    rank,
    rational_nullity,
    shifted,
)
from divgraph.exceptions import VerificationError, check_guard

from .finite import FinitePoset, chain, comparability_graph, h_vector, product, s0_poset, tensor_lift

logger = structlog.get_logger("divgraph.poset")


def integer_eigenspaces(adjacency: np.ndarray, f: Optional[IntPolynomial] = None) -> Dict[int, List[List[int]]]:
    """
    Exact eigenspace bases for the integer eigenvalues of a symmetric 0/1 matrix.

    Integer roots of f lie in [-(n-1), n-1] since the spectral radius is at
    most the maximum degree.
    """
    f = charpoly(adjacency) if f is None else f
    n = adjacency.shape[0]
    spaces = {}
    for lam in range(-(n - 1), n):
        if f(lam) != 0:
            continue
        _, basis = rational_nullity(shifted(adjacency, lam))
        spaces[lam] = basis
    return spaces


def _divides_or_raise(divisor: IntPolynomial, dividend: IntPolynomial, what: str, size: int) -> IntPolynomial:
    divides, quotient = poly_divides(divisor, dividend)
    if not divides:
        logger.error("❌ Poset divisibility failed", check=what, size=size)
        raise VerificationError(f"{what}: characteristic polynomial does not divide", {"size": size})
    return quotient


def verify_poset_lift(p: FinitePoset, config: Optional[DivGraphConfig] = None) -> PosetLiftReport:
    """
    Check f_P | f_{P x S0} and lift every integer-eigenvalue eigenvector.

    Each basis vector g of ker(M_P - lambda I) lifts to g x h with
    M' (g x h) = lambda (g x h); the lifted family keeps the rank of the
    original one.

    Raises:
        VerificationError: divisibility, eigenvector or rank check failed
    """
    config = resolve_config(config)
    check_guard("poset lift", p.size, config.poset_lift_max_size, "poset_lift_max_size")

    s0 = s0_poset()
    h = h_vector()
    lifted_poset = product(p, s0)
    m = comparability_graph(p).astype(np.int64)
    m_lifted = comparability_graph(lifted_poset).astype(np.int64)

    f_p = charpoly(m, config=config)
    f_lifted = charpoly(m_lifted, config=config)
    quotient = _divides_or_raise(f_p, f_lifted, "poset lift", p.size)

    originals: List[List[int]] = []
    lifts: List[List[int]] = []
    for lam, basis in integer_eigenspaces(m, f_p).items():
        for g in basis:
            lifted = list(tensor_lift(g, h, p, s0))
            if not kernel_residual_zero(shifted(m_lifted, lam), [lifted]):
                logger.error("❌ Lifted vector is not an eigenvector", eigenvalue=lam, size=p.size)
                raise VerificationError("tensor lift is not an eigenvector", {"eigenvalue": lam, "g": g})
            originals.append(g)
            lifts.append(lifted)

    rank_preserved = rank(originals) == rank(lifts)
    if not rank_preserved:
        raise VerificationError("tensor lift lost rank", {"size": p.size})

    logger.debug("✅ Poset lift verified", size=p.size, eigenvectors=len(lifts))
    return PosetLiftReport(
        size=p.size,
        f_poset=list(f_p.coeffs),
        f_lifted=list(f_lifted.coeffs),
        quotient=list(quotient.coeffs),
        divides=True,
        eigenvectors_lifted=len(lifts),
        rank_preserved=rank_preserved,
    )


def verify_poset_squared_lift(p: FinitePoset, config: Optional[DivGraphConfig] = None) -> PosetLiftReport:
    """
    With S' = P x {0,1}: f_P | f_{P x S0} and f_{S'}^2 | f_{S' x S0}.

    S' carries an element covered by nothing but its partner in the new
    coordinate, the poset analogue of a prime dividing n exactly once.
    """
    config = resolve_config(config)
    check_guard("poset lift", p.size, config.poset_lift_max_size, "poset_lift_max_size")
    s0 = s0_poset()

    f_p = charpoly(comparability_graph(p), config=config)
    _divides_or_raise(f_p, charpoly(comparability_graph(product(p, s0)), config=config),
                      "poset lift", p.size)

    s_prime = product(p, chain(2))
    f_prime = charpoly(comparability_graph(s_prime), config=config)
    f_prime_lifted = charpoly(comparability_graph(product(s_prime, s0)), config=config)
    quotient = _divides_or_raise(f_prime * f_prime, f_prime_lifted, "squared poset lift", p.size)

    return PosetLiftReport(
        size=p.size,
        squared=True,
        f_poset=list(f_prime.coeffs),
        f_lifted=list(f_prime_lifted.coeffs),
        quotient=list(quotient.coeffs),
        divides=True,
    )
