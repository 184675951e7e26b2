"""
Determinants and kernels of D_{p q^a}.

In the order 1, q, ..., q^a, p, pq, ..., pq^a the adjacency M_a has
det(M_a) = det(M_{a+6}), with base values -1, 0, 3, 5, 4, 1, and M_a is
singular exactly when a = 1 (mod 6).
"""

from typing import List, Optional

import numpy as np
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ObservationReport
from divgraph.exactla import determinant, nullity, to_domain_matrix
from divgraph.exceptions import InvalidInputError, VerificationError, check_guard

from .eigenvectors import two_prime_matrix

logger = structlog.get_logger("divgraph.spectra.det")

DET_PERIOD = (-1, 0, 3, 5, 4, 1)

M5 = np.array([
    [0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1],
    [1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1],
    [1, 1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 1],
    [1, 1, 1, 1, 0, 1, 0, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1],
    [1, 1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1],
    [1, 1, 1, 1, 0, 0, 1, 1, 1, 0, 1, 1],
    [1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
], dtype=np.int64)

M5_INVERSE = np.array([
    [-2, 1, 2, 1, -1, -2, -2, -1, 1, 2, 1, -1],
    [1, -2, -1, 0, 1, 1, 2, 0, -1, -1, 0, 1],
    [2, -1, -4, -1, 2, 3, 3, 2, -2, -3, -1, 2],
    [1, 0, -1, -2, 1, 2, 1, 1, 0, -2, -1, 1],
    [-1, 1, 2, 1, -2, -1, -2, -1, 1, 2, 0, -1],
    [-2, 1, 3, 2, -1, -4, -3, -2, 1, 3, 2, -2],
    [-2, 2, 3, 1, -2, -3, -4, -1, 2, 3, 1, -2],
    [-1, 0, 2, 1, -1, -2, -1, -2, 1, 2, 1, -1],
    [1, -1, -2, 0, 1, 1, 2, 1, -2, -1, 0, 1],
    [2, -1, -3, -2, 2, 3, 3, 2, -1, -4, -1, 2],
    [1, 0, -1, -1, 0, 2, 1, 1, 0, -1, -2, 1],
    [-1, 1, 2, 1, -1, -2, -2, -1, 1, 2, 1, -2],
], dtype=np.int64)


def pq_power_matrix(a: int, config: Optional[DivGraphConfig] = None) -> np.ndarray:
    """M_a: adjacency of D_{p q^a} in the order 1, q, ..., q^a, p, pq, ..., pq^a"""
    if a < 0:
        raise InvalidInputError(f"a must be non-negative, got {a}")
    return two_prime_matrix(1, a, config)


def det_sequence_pq_power(a_max: int, config: Optional[DivGraphConfig] = None) -> List[int]:
    """
    det(M_a) for a = 0..a_max, checked against the 6-periodic extension
    of (-1, 0, 3, 5, 4, 1).

    Raises:
        SizeGuardError: a_max > det_sequence_max_a
        VerificationError: a value breaks the period
    """
    config = resolve_config(config)
    if a_max < 0:
        raise InvalidInputError(f"a_max must be non-negative, got {a_max}")
    check_guard("determinant sequence", a_max, config.det_sequence_max_a, "det_sequence_max_a")

    values = [determinant(pq_power_matrix(a, config), config=config) for a in range(a_max + 1)]
    mismatches = [{"a": a, "expected": DET_PERIOD[a % 6], "computed": d}
                  for a, d in enumerate(values) if d != DET_PERIOD[a % 6]]
    if mismatches:
        logger.error("❌ Determinant periodicity failed", mismatches=mismatches)
        raise VerificationError("det(M_a) is not 6-periodic", {"mismatches": mismatches})
    logger.info("✅ Determinant sequence verified", a_max=a_max)
    return values


def zero_iff_mod6(a: int, seed: Optional[int] = None, config: Optional[DivGraphConfig] = None) -> bool:
    """
    Whether 0 is an eigenvalue of D_{p q^a}; must agree with a = 1 (mod 6).

    Raises:
        SizeGuardError: a > mod6_max_a
        VerificationError: the certified nullity contradicts the criterion
    """
    config = resolve_config(config)
    if a < 0:
        raise InvalidInputError(f"a must be non-negative, got {a}")
    check_guard("mod-6 criterion exponent", a, config.mod6_max_a, "mod6_max_a")

    certificate = nullity(pq_power_matrix(a, config), seed=seed, config=config)
    singular = certificate.nullity >= 1
    if singular != (a % 6 == 1):
        logger.error("❌ Mod-6 kernel criterion failed", a=a, nullity=certificate.nullity)
        raise VerificationError(f"m_0 of type (1,{a}) is {certificate.nullity}",
                                {"a": a, "nullity": certificate.nullity})
    return singular


def reproduce_m5(config: Optional[DivGraphConfig] = None) -> ObservationReport:
    """
    Compare the built M_5 with the displayed matrix, and the displayed
    inverse with the exact inverse over QQ. Discrepancies are reported,
    not corrected.
    """
    built = pq_power_matrix(5, config)
    checked, mismatches = [], []

    matrix_equal = bool(np.array_equal(built, M5))
    checked.append({"check": "M5 entries", "holds": matrix_equal})
    if not matrix_equal:
        rows, cols = np.nonzero(built != M5)
        mismatches.append({"check": "M5 entries", "positions": [[int(i), int(j)] for i, j in zip(rows, cols)]})

    identity = bool(np.array_equal(M5 @ M5_INVERSE, np.eye(12, dtype=np.int64)))
    checked.append({"check": "M5 * M5^-1 = I", "holds": identity})
    if not identity:
        mismatches.append({"check": "M5 * M5^-1 = I"})

    exact = to_domain_matrix(M5).to_field().inv().to_Matrix()
    inverse_equal = all(exact[i, j] == int(M5_INVERSE[i, j]) for i in range(12) for j in range(12))
    checked.append({"check": "M5^-1 entries", "holds": inverse_equal})
    if not inverse_equal:
        mismatches.append({"check": "M5^-1 entries"})

    if mismatches:
        logger.warning("⚠️ M5 display differs from the computed matrices", mismatches=mismatches)
    return ObservationReport(name="reproduce-m5", holds=not mismatches, checked=checked, mismatches=mismatches)


def schur_complement_check() -> ObservationReport:
    """
    B M_5^{-1} C = 0 for the coupling blocks of M_{a+6} against M_a.

    Those blocks are built from all-ones rows and the pattern [0 1]
    (zeros on the q-powers, ones on the p-multiples), so the product
    vanishes iff the four forms 1 M^-1 1, w M^-1 1, 1 M^-1 w, w M^-1 w do.
    """
    ones = np.ones(12, dtype=np.int64)
    w = np.concatenate([np.zeros(6, dtype=np.int64), np.ones(6, dtype=np.int64)])
    forms = {
        "1 M^-1 1": int(ones @ M5_INVERSE @ ones),
        "w M^-1 1": int(w @ M5_INVERSE @ ones),
        "1 M^-1 w": int(ones @ M5_INVERSE @ w),
        "w M^-1 w": int(w @ M5_INVERSE @ w),
    }
    identity = bool(np.array_equal(M5 @ M5_INVERSE, np.eye(12, dtype=np.int64)))
    checked = [{"form": name, "value": value} for name, value in forms.items()]
    checked.append({"form": "M5 * M5^-1 = I", "value": identity})
    mismatches = [entry for entry in checked[:4] if entry["value"] != 0]
    if not identity:
        mismatches.append({"form": "M5 * M5^-1 = I", "value": False})
    return ObservationReport(name="schur-complement", holds=not mismatches, checked=checked, mismatches=mismatches)
