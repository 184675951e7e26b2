"""
Characteristic polynomial divisibility: f_n | f_{npq}, and f_n^2 | f_{npq}
when some prime divides n exactly once.
"""

from typing import List, Optional, Tuple

import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import DivisibilityReport, FactorizationType, ObservationReport
from divgraph.exactla import IntPolynomial, charpoly, poly_divides
from divgraph.exceptions import PreconditionError, VerificationError, check_guard
from divgraph.graph import TypeLike, build, coerce_type, enumerate_vectors, vector_index

logger = structlog.get_logger("divgraph.spectra")


def _type_charpolys(t: FactorizationType, config: DivGraphConfig) -> Tuple[FactorizationType, IntPolynomial, IntPolynomial]:
    lifted = t.augmented(1, 1)
    check_guard("characteristic polynomial", lifted.vertex_count, config.charpoly_max_dim, "charpoly_max_dim")
    f = charpoly(build(t, config).adjacency, config=config)
    f_lifted = charpoly(build(lifted, config).adjacency, config=config)
    return lifted, f, f_lifted


def _divisibility_report(check: str, t: FactorizationType, lifted: FactorizationType,
                         divisor: IntPolynomial, dividend: IntPolynomial, squared: bool) -> DivisibilityReport:
    divides, quotient = poly_divides(divisor, dividend)
    if not divides:
        logger.error("❌ Characteristic polynomial divisibility failed",
                     check=check, type=str(t), lifted_type=str(lifted))
        raise VerificationError(f"{check}: f does not divide for type {t}",
                                {"type": list(t.exponents), "squared": squared})
    logger.info("✅ Divisibility verified", check=check, type=str(t), degree=dividend.degree)
    return DivisibilityReport(
        check=check,
        type=list(t.exponents),
        lifted_type=list(lifted.exponents),
        divisor=list(divisor.coeffs),
        dividend=list(dividend.coeffs),
        quotient=list(quotient.coeffs),
        divides=True,
        squared=squared,
    )


def verify_f_divides(t: TypeLike, config: Optional[DivGraphConfig] = None) -> DivisibilityReport:
    """
    f_n divides f_{npq} for primes p, q not dividing n.

    Raises:
        SizeGuardError: the lifted graph exceeds charpoly_max_dim
        VerificationError: the division leaves a remainder
    """
    config = resolve_config(config)
    ftype = coerce_type(t)
    lifted, f, f_lifted = _type_charpolys(ftype, config)
    return _divisibility_report("thm-main", ftype, lifted, f, f_lifted, squared=False)


def verify_f_squared_divides(t: TypeLike, config: Optional[DivGraphConfig] = None) -> DivisibilityReport:
    """
    f_n^2 divides f_{npq} when some prime r divides n exactly once.

    Raises:
        PreconditionError: no part of t equals 1
        VerificationError: the division leaves a remainder
    """
    config = resolve_config(config)
    ftype = coerce_type(t)
    if 1 not in ftype.exponents:
        raise PreconditionError(f"type {ftype} has no part equal to 1 (needs a prime r with r || n)")
    lifted, f, f_lifted = _type_charpolys(ftype, config)
    return _divisibility_report("thm-main2", ftype, lifted, f * f, f_lifted, squared=True)


def npq_order(t: FactorizationType) -> Tuple[FactorizationType, List[int]]:
    """
    Vertex order of D_{npq} as [Div(n), p Div(n), q Div(n), pq Div(n)].

    Returns the lifted type and perm with perm[k] = canonical index of the
    k-th vertex in that order.
    """
    lifted = t.augmented(1, 1)
    extended = list(t.exponents) + [1, 1]
    # stable sort puts the new unit coordinates after any unit parts of t
    order = sorted(range(len(extended)), key=lambda i: extended[i])
    canonical_bounds = [extended[i] for i in order]
    base = enumerate_vectors(t.exponents)
    perm = []
    for ep, eq in ((0, 0), (1, 0), (0, 1), (1, 1)):
        for x in base:
            full = [int(c) for c in x] + [ep, eq]
            perm.append(vector_index(canonical_bounds, [full[i] for i in order]))
    return lifted, perm


def block_form_npq(t: TypeLike, config: Optional[DivGraphConfig] = None) -> ObservationReport:
    """
    Adjacency of D_{npq} as [[B,C,C,C],[C^T,B,0,C],[C^T,0,B,C],[C^T,C^T,C^T,B]],
    with C[i, j] = [x_i | x_j] on Div(n) and B = C + C^T - 2I the adjacency of D_n.
    """
    config = resolve_config(config)
    ftype = coerce_type(t)
    vectors = [tuple(int(c) for c in x) for x in enumerate_vectors(ftype.exponents)]
    k = len(vectors)
    c = np.array([[int(all(a <= b for a, b in zip(x, y))) for y in vectors] for x in vectors], dtype=np.int64)
    b = c + c.T - 2 * np.eye(k, dtype=np.int64)
    zero = np.zeros((k, k), dtype=np.int64)
    block = np.block([
        [b, c, c, c],
        [c.T, b, zero, c],
        [c.T, zero, b, c],
        [c.T, c.T, c.T, b],
    ])
    lifted, perm = npq_order(ftype)
    built = build(lifted, config).adjacency.astype(np.int64)
    reordered = built[np.ix_(perm, perm)]
    holds = bool(np.array_equal(block, reordered))
    b_matches = bool(np.array_equal(b, build(ftype, config).adjacency))
    mismatches = [] if holds and b_matches else [{"type": list(ftype.exponents),
                                                   "block_form": holds, "b_is_adjacency": b_matches}]
    return ObservationReport(name="block-form-npq", holds=holds and b_matches,
                             checked=[{"type": list(ftype.exponents), "v": lifted.vertex_count}],
                             mismatches=mismatches)
