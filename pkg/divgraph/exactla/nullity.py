"""
Certified nullity of integer matrices.

rank mod p never exceeds the rational rank, so a modular nullity is an
upper bound. It becomes a certificate once that many kernel vectors have
been lifted to the integers (CRT + rational reconstruction) and checked by
exact multiplication.
"""

import random
from functools import reduce as fold
from math import gcd, lcm
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy import QQ

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import NullityCertificate
from divgraph.exceptions import CertificationError, InvalidInputError, check_guard

from .dense import MatrixLike, as_int_matrix, shifted, to_domain_matrix
from .modular import crt_accumulate, random_prime, rational_reconstruction, rref_mod

logger = structlog.get_logger("divgraph.exactla.nullity")

NullityMode = Literal["auto", "rational-exact", "modular"]

_INT64_SAFE = 2 ** 62


def primitive(vector: Sequence[Tuple[int, int]]) -> List[int]:
    """
    Scale a rational vector, given as (numerator, denominator) pairs, to a
    primitive integer vector whose first nonzero entry is positive.
    """
    den = fold(lcm, (d for _, d in vector), 1)
    ints = [n * (den // d) for n, d in vector]
    g = fold(gcd, ints, 0)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints


def kernel_residual_zero(matrix: np.ndarray, basis: Sequence[Sequence[int]]) -> bool:
    """Exact check that matrix @ v == 0 for every v in basis"""
    if not basis:
        return True
    vectors = np.array(basis, dtype=object).T
    largest = max(abs(int(x)) for x in vectors.flat)
    row_weight = int(np.abs(matrix).sum(axis=1).max()) if matrix.size else 0
    if largest * max(row_weight, 1) < _INT64_SAFE:
        residual = matrix @ vectors.astype(np.int64)
    else:
        residual = matrix.astype(object) @ vectors
    return not np.any(residual != 0)


def _basis_from_rref(rows, pivots: Sequence[int], n: int) -> List[List[int]]:
    """Kernel basis read off a rational RREF: one vector per free column"""
    pivot_set = set(pivots)
    basis = []
    for free in (c for c in range(n) if c not in pivot_set):
        entries = [(0, 1)] * n
        entries[free] = (1, 1)
        for i, col in enumerate(pivots):
            x = -rows[i][free]
            entries[col] = (int(QQ.numer(x)), int(QQ.denom(x)))
        basis.append(primitive(entries))
    return basis


def rational_nullity(matrix: np.ndarray) -> Tuple[int, List[List[int]]]:
    """Nullity and primitive integer kernel basis via RREF over QQ"""
    n = matrix.shape[0]
    if n == 0:
        return 0, []
    rref, pivots = to_domain_matrix(matrix).to_field().rref()
    basis = _basis_from_rref(rref.to_list(), list(pivots), n)
    return len(basis), basis


def _modular_kernel(r: np.ndarray, pivots: Sequence[int], p: int) -> np.ndarray:
    """Kernel basis mod p, one row per free column, identity on the free coordinates"""
    n = r.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    k = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        k[j, f] = 1
        if pivots:
            k[j, list(pivots)] = (-r[:len(pivots), f]) % p
    return k


def _reconstruct(acc: np.ndarray, modulus: int) -> Optional[List[List[int]]]:
    basis = []
    for row in acc:
        entries = []
        for value in row:
            value = int(value)
            if value == 0:
                entries.append((0, 1))
                continue
            fraction = rational_reconstruction(value, modulus)
            if fraction is None:
                return None
            entries.append(fraction)
        basis.append(primitive(entries))
    return basis


def _lift_kernel(matrix: np.ndarray, kernels: List[Tuple[int, np.ndarray]], pivots: List[int],
                 rng: random.Random, config: DivGraphConfig) -> Tuple[Optional[List[List[int]]], List[int]]:
    """
    Combine modular kernels until the reconstructed basis verifies exactly.

    Returns (basis or None, primes used).
    """
    primes = [p for p, _ in kernels]
    acc = np.zeros(kernels[0][1].shape, dtype=object)
    modulus = 1
    for p, k in kernels:
        acc, modulus = crt_accumulate(acc, modulus, k, p)

    draws = 0
    while True:
        basis = _reconstruct(acc, modulus)
        if basis is not None and kernel_residual_zero(matrix, basis):
            return basis, primes
        if len(primes) >= config.modular_max_primes or draws >= 2 * config.modular_max_primes:
            return None, primes
        draws += 1
        p = random_prime(rng, exclude=primes)
        r, extra_pivots = rref_mod(matrix, p)
        if extra_pivots != pivots:
            logger.debug("🎲 Discarding unlucky prime", prime=p)
            continue
        acc, modulus = crt_accumulate(acc, modulus, _modular_kernel(r, pivots, p), p)
        primes.append(p)


def _modular_certificate(m: np.ndarray, eigenvalue: int, seed: int, include_basis: bool,
                         config: DivGraphConfig) -> Optional[NullityCertificate]:
    rng = random.Random(seed)
    n = m.shape[0]
    for attempt in range(config.modular_prime_retries):
        p1 = random_prime(rng)
        p2 = random_prime(rng, exclude=[p1])
        r1, piv1 = rref_mod(m, p1)
        r2, piv2 = rref_mod(m, p2)
        if piv1 != piv2:
            logger.warning("⚠️ Modular ranks disagree, retrying",
                           attempt=attempt, primes=[p1, p2], ranks=[len(piv1), len(piv2)])
            continue

        if len(piv1) == n:
            return NullityCertificate(eigenvalue=eigenvalue, nullity=0, method="modular-agreement",
                                      primes=[p1, p2], seed=seed, kernel_verified=True,
                                      kernel_basis=[] if include_basis else None)

        kernels = [(p1, _modular_kernel(r1, piv1, p1)), (p2, _modular_kernel(r2, piv2, p2))]
        basis, primes = _lift_kernel(m, kernels, piv1, rng, config)
        if basis is not None:
            return NullityCertificate(eigenvalue=eigenvalue, nullity=len(basis), method="modular-agreement",
                                      primes=primes, seed=seed, kernel_verified=True,
                                      kernel_basis=basis if include_basis else None)
        logger.warning("⚠️ Kernel lift failed, retrying", attempt=attempt, primes=len(primes))
    return None


def nullity(matrix: MatrixLike, mode: NullityMode = "auto", eigenvalue: int = 0,
            seed: Optional[int] = None, include_basis: bool = False,
            config: Optional[DivGraphConfig] = None) -> NullityCertificate:
    """
    Certified dim ker(M - eigenvalue * I) over the rationals.

    Args:
        matrix: square integer matrix M
        mode: "rational-exact", "modular" or "auto" (rational up to
            exact_nullity_threshold)
        eigenvalue: shift applied before computing the kernel
        seed: RNG seed for prime selection; defaults to config.seed
        include_basis: attach the primitive integer kernel basis
        config: guards; defaults to the global configuration

    Returns:
        NullityCertificate

    Raises:
        CertificationError: modular certification failed and the matrix is
            too large for rational elimination
    """
    config = resolve_config(config)
    m = shifted(matrix, eigenvalue) if eigenvalue else as_int_matrix(matrix)
    n = m.shape[0]
    seed = config.seed if seed is None else seed

    if mode == "auto":
        mode = "rational-exact" if n <= config.exact_nullity_threshold else "modular"

    if mode == "modular":
        check_guard("modular nullity", n, config.modular_nullity_max_dim, "modular_nullity_max_dim")
        certificate = _modular_certificate(m, eigenvalue, seed, include_basis, config)
        if certificate is not None:
            logger.debug("✅ Nullity certified", dim=n, eigenvalue=eigenvalue,
                         nullity=certificate.nullity, primes=len(certificate.primes))
            return certificate
        if n > config.rational_nullity_max_dim:
            logger.error("❌ Nullity could not be certified", dim=n, eigenvalue=eigenvalue, seed=seed)
            raise CertificationError(
                f"modular nullity of a {n}x{n} matrix could not be certified with seed {seed}",
                {"dim": n, "eigenvalue": eigenvalue, "seed": seed},
            )
        logger.warning("⚠️ Escalating to rational elimination", dim=n, eigenvalue=eigenvalue)
        mode = "rational-exact"

    if mode != "rational-exact":
        raise InvalidInputError(f"unknown nullity mode {mode!r}")

    check_guard("rational nullity", n, config.rational_nullity_max_dim, "rational_nullity_max_dim")
    k, basis = rational_nullity(m)
    return NullityCertificate(eigenvalue=eigenvalue, nullity=k, method="rational-exact",
                              kernel_verified=kernel_residual_zero(m, basis),
                              kernel_basis=basis if include_basis else None)
