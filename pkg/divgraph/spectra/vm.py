"""
V_m: functions on {0,1}^{2m} whose strictly-below and strictly-above sums
vanish at every point.
"""

from typing import List, Optional

import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ObservationReport, VmSpace
from divgraph.exactla import kernel_residual_zero, nullity
from divgraph.exceptions import InvalidInputError, VerificationError, check_guard
from divgraph.poset import FinitePoset, chain, power, tensor_lift

logger = structlog.get_logger("divgraph.spectra.vm")


def vm_points(m: int) -> FinitePoset:
    """{0,1}^{2m}, coordinate 1 fastest; a single point for m = 0"""
    return power(chain(2), 2 * m)


def _constraints(points: FinitePoset) -> np.ndarray:
    """Rows L^T (below-sums) stacked on L (above-sums), L[b, a] = [b < a]"""
    less = points.less.astype(np.int64)
    return np.vstack([less.T, less])


def vm_space(m: int, seed: Optional[int] = None, config: Optional[DivGraphConfig] = None) -> VmSpace:
    """
    Exact basis of V_m.

    The kernel of the stacked constraints equals the kernel of the square
    Gram matrix L L^T + L^T L, which goes through the nullity pipeline.
    Every basis vector is also checked against the comparability adjacency
    L + L^T, so dim V_m <= m_0 of the squarefree type 1^{2m}.

    Raises:
        SizeGuardError: 2m > vm_max_points_log2
    """
    config = resolve_config(config)
    if m < 0:
        raise InvalidInputError(f"m must be non-negative, got {m}")
    check_guard("V_m cube dimension", 2 * m, config.vm_max_points_log2, "vm_max_points_log2")

    points = vm_points(m)
    less = points.less.astype(np.int64)
    gram = less @ less.T + less.T @ less
    certificate = nullity(gram, seed=seed, include_basis=True, config=config)
    basis = certificate.kernel_basis or []

    if not kernel_residual_zero(_constraints(points), basis):
        raise VerificationError(f"V_{m} basis violates the sum constraints", {"m": m})
    if not kernel_residual_zero(less + less.T, basis):
        raise VerificationError(f"V_{m} is not inside the adjacency nullspace", {"m": m})

    logger.info("🧊 V_m computed", m=m, points=points.size, dimension=len(basis))
    return VmSpace(m=m, dimension=len(basis), basis=basis)


def vm_tensor_inclusion(m1: int, m2: int, seed: Optional[int] = None,
                        config: Optional[DivGraphConfig] = None) -> ObservationReport:
    """
    V_{m1} (x) V_{m2} inside V_{m1 + m2}.

    Each product f (x) g of basis vectors, indexed i + 2^{2 m1} j, must
    satisfy the constraints on {0,1}^{2(m1 + m2)}; the products are
    independent, so dim V_{m1} * dim V_{m2} <= dim V_{m1 + m2}.

    Raises:
        SizeGuardError: 2 (m1 + m2) > vm_max_points_log2
        VerificationError: a product violates a constraint
    """
    config = resolve_config(config)
    check_guard("V_m cube dimension", 2 * (m1 + m2), config.vm_max_points_log2, "vm_max_points_log2")

    first = vm_space(m1, seed, config)
    second = vm_space(m2, seed, config)
    target = vm_space(m1 + m2, seed, config)
    constraints = _constraints(vm_points(m1 + m2))

    products: List[List[int]] = [list(tensor_lift(f, g)) for g in second.basis for f in first.basis]
    contained = kernel_residual_zero(constraints, products)
    bounded = first.dimension * second.dimension <= target.dimension
    checked = [{
        "m1": m1,
        "m2": m2,
        "products": len(products),
        "dim_m1": first.dimension,
        "dim_m2": second.dimension,
        "dim_sum": target.dimension,
    }]
    if not (contained and bounded):
        logger.error("❌ Tensor inclusion failed", m1=m1, m2=m2, contained=contained, bounded=bounded)
        raise VerificationError(f"V_{m1} x V_{m2} is not contained in V_{m1 + m2}",
                                {"contained": contained, "dimension_bound": bounded})
    return ObservationReport(name=f"vm-tensor-inclusion({m1},{m2})", holds=True, checked=checked)
