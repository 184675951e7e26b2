"""
Exact characteristic polynomials and determinants of integer matrices.

Small matrices go through sympy's DomainMatrix over ZZ (division-free
Berkowitz for the characteristic polynomial, fraction-free Bareiss for the
determinant). Larger ones are reduced modulo enough word-size primes to
cover a Hadamard-type bound and recombined by CRT, which is exact once the
product of the primes exceeds twice the bound.
"""

import time
from typing import Literal, Optional, Sequence, Union

import numpy as np
import structlog
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.exceptions import InvalidInputError, check_guard

from .modular import (
    charpoly_mod,
    coefficient_bound,
    det_mod,
    hadamard_bound,
    primes_covering,
    symmetric_crt,
)
from .polynomial import IntPolynomial

logger = structlog.get_logger("divgraph.exactla")

MatrixLike = Union[np.ndarray, Sequence[Sequence[int]]]
CharpolyMethod = Literal["auto", "berkowitz", "modular"]


def as_int_matrix(matrix: MatrixLike) -> np.ndarray:
    """Validate a square integer matrix and return it as int64"""
    array = np.asarray(matrix)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {array.shape}")
    if array.dtype == object:
        if not all(isinstance(x, (int, np.integer)) for x in array.flat):
            raise InvalidInputError("expected integer entries")
        if array.size and max(abs(int(x)) for x in array.flat) >= 2 ** 31:
            raise InvalidInputError("matrix entries must be below 2**31 in absolute value")
    elif array.size and not (np.issubdtype(array.dtype, np.integer) or array.dtype == bool):
        raise InvalidInputError(f"expected integer entries, got dtype {array.dtype}")
    return array.astype(np.int64)


def shifted(matrix: MatrixLike, eigenvalue: int) -> np.ndarray:
    """M - eigenvalue * I"""
    m = as_int_matrix(matrix)
    return m - eigenvalue * np.eye(m.shape[0], dtype=np.int64)


def to_domain_matrix(m: np.ndarray) -> DomainMatrix:
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in m], m.shape, ZZ)


def charpoly(matrix: MatrixLike, method: CharpolyMethod = "auto",
             config: Optional[DivGraphConfig] = None) -> IntPolynomial:
    """
    Characteristic polynomial det(lambda I - M), monic of degree dim(M).

    Args:
        matrix: square integer matrix
        method: "berkowitz" (sympy, division-free), "modular" (multimodular
            Hessenberg) or "auto" to pick by dimension
        config: guards; defaults to the global configuration

    Returns:
        IntPolynomial with constant term first
    """
    config = resolve_config(config)
    m = as_int_matrix(matrix)
    n = m.shape[0]
    check_guard("characteristic polynomial", n, config.charpoly_max_dim, "charpoly_max_dim")
    if n == 0:
        return IntPolynomial([1])
    if method == "auto":
        method = "berkowitz" if n <= config.berkowitz_max_dim else "modular"

    started = time.perf_counter()
    if method == "berkowitz":
        # sympy lists the coefficients highest degree first
        coeffs = [int(c) for c in to_domain_matrix(m).charpoly()]
        result = IntPolynomial(reversed(coeffs))
    elif method == "modular":
        result = _charpoly_multimodular(m)
    else:
        raise InvalidInputError(f"unknown charpoly method {method!r}")

    logger.debug("🧮 Characteristic polynomial computed",
                 dim=n, method=method, elapsed=round(time.perf_counter() - started, 4))
    return result


def _charpoly_multimodular(m: np.ndarray) -> IntPolynomial:
    n = m.shape[0]
    primes = primes_covering(coefficient_bound(m))
    residues = [charpoly_mod(m, p) for p in primes]
    coeffs = []
    for k in range(n + 1):
        value, _ = symmetric_crt([r[k] for r in residues], primes)
        coeffs.append(value)
    logger.debug("🔢 Multimodular charpoly", dim=n, primes=len(primes))
    return IntPolynomial(coeffs)


def determinant(matrix: MatrixLike, config: Optional[DivGraphConfig] = None) -> int:
    """
    Exact determinant.

    Bareiss elimination through sympy up to bareiss_max_dim, otherwise
    Gaussian elimination modulo primes covering the Hadamard bound.
    """
    config = resolve_config(config)
    m = as_int_matrix(matrix)
    n = m.shape[0]
    check_guard("determinant", n, config.determinant_max_dim, "determinant_max_dim")
    if n == 0:
        return 1
    if n <= config.bareiss_max_dim:
        return int(to_domain_matrix(m).det())

    primes = primes_covering(hadamard_bound(m))
    value, _ = symmetric_crt([det_mod(m, p) for p in primes], primes)
    logger.debug("🔢 Multimodular determinant", dim=n, primes=len(primes))
    return value


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over QQ of a list of integer vectors (arbitrary size entries)"""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    dm = DomainMatrix([[ZZ(int(x)) for x in r] for r in rows], (len(rows), len(rows[0])), ZZ)
    return int(dm.to_field().rank())


def trace(matrix: MatrixLike) -> int:
    return int(np.trace(as_int_matrix(matrix)))
