"""
Linear algebra modulo word-size primes.

All residues live in int64 numpy arrays with primes below 2**31, so every
product of two residues fits in 63 bits. Matrix-vector products split the
vector into 16-bit limbs to keep the accumulated sums in range.
"""

import random
from math import isqrt, prod
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
import structlog
from sympy import nextprime, prevprime
from sympy.ntheory.modular import crt

logger = structlog.get_logger("divgraph.exactla.modular")

PRIME_CEILING = 2 ** 31
RANDOM_PRIME_FLOOR = 2 ** 30

_LIMB = 1 << 16


def descending_primes(start: int = PRIME_CEILING) -> Iterator[int]:
    """Deterministic primes below start, largest first"""
    p = start
    while True:
        p = int(prevprime(p))
        yield p


def random_prime(rng: random.Random, exclude: Sequence[int] = ()) -> int:
    """Uniformly placed prime in (2**30, 2**31) not in exclude"""
    while True:
        p = int(nextprime(rng.randrange(RANDOM_PRIME_FLOOR, PRIME_CEILING - 64)))
        if p < PRIME_CEILING and p not in exclude:
            return p


def reduce(matrix: np.ndarray, p: int) -> np.ndarray:
    return np.mod(np.asarray(matrix, dtype=np.int64), p)


def matvec_mod(a: np.ndarray, x: np.ndarray, p: int) -> np.ndarray:
    """a @ x mod p for reduced operands"""
    hi, lo = np.divmod(x, _LIMB)
    return ((a @ hi) % p * _LIMB + (a @ lo) % p) % p


def rref_mod(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """
    Reduced row echelon form over GF(p).

    Args:
        matrix: integer matrix (any shape)
        p: prime below 2**31

    Returns:
        (R, pivots) with R reduced mod p and pivot column indices ascending
    """
    r = reduce(matrix, p).copy()
    rows, cols = r.shape
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nonzero = np.flatnonzero(r[row:, col])
        if nonzero.size == 0:
            continue
        k = row + int(nonzero[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = r[row] * inv % p
        factors = r[:, col].copy()
        factors[row] = 0
        touched = np.flatnonzero(factors)
        if touched.size:
            r[touched] = (r[touched] - np.outer(factors[touched], r[row]) % p) % p
        pivots.append(col)
        row += 1
    return r, pivots


def det_mod(matrix: np.ndarray, p: int) -> int:
    """Determinant over GF(p) by Gaussian elimination"""
    a = reduce(matrix, p).copy()
    n = a.shape[0]
    det = 1
    for col in range(n):
        nonzero = np.flatnonzero(a[col:, col])
        if nonzero.size == 0:
            return 0
        k = col + int(nonzero[0])
        if k != col:
            a[[col, k]] = a[[k, col]]
            det = -det
        pivot = int(a[col, col])
        det = det * pivot % p
        if col + 1 < n:
            u = a[col + 1:, col] * pow(pivot, -1, p) % p
            a[col + 1:, col:] = (a[col + 1:, col:] - np.outer(u, a[col, col:]) % p) % p
    return det % p


def hessenberg_mod(matrix: np.ndarray, p: int) -> np.ndarray:
    """Similarity reduction to upper Hessenberg form over GF(p)"""
    h = reduce(matrix, p).copy()
    n = h.shape[0]
    for k in range(n - 2):
        nonzero = np.flatnonzero(h[k + 1:, k])
        if nonzero.size == 0:
            continue
        i = k + 1 + int(nonzero[0])
        if i != k + 1:
            h[[i, k + 1]] = h[[k + 1, i]]
            h[:, [i, k + 1]] = h[:, [k + 1, i]]
        inv = pow(int(h[k + 1, k]), -1, p)
        u = h[k + 2:, k] * inv % p
        if not u.any():
            continue
        # row_j -= u_j * row_{k+1}, then col_{k+1} += sum_j u_j * col_j
        h[k + 2:, :] = (h[k + 2:, :] - np.outer(u, h[k + 1, :]) % p) % p
        h[:, k + 1] = (h[:, k + 1] + matvec_mod(h[:, k + 2:], u, p)) % p
    return h


def charpoly_mod(matrix: np.ndarray, p: int) -> List[int]:
    """
    Characteristic polynomial det(lambda I - M) over GF(p), constant term first.

    Uses the Hessenberg recurrence
    p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{i<j<=m} h_{j,j-1}) p_{i-1}.
    """
    h = hessenberg_mod(matrix, p)
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        shifted = np.zeros(n + 1, dtype=np.int64)
        shifted[1:] = prev[:-1]
        current = (shifted - int(h[m - 1, m - 1]) * prev % p) % p
        weights = np.zeros(m - 1, dtype=np.int64)
        run = 1
        for i in range(m - 1, 0, -1):
            run = run * int(h[i, i - 1]) % p
            if run == 0:
                break
            weights[i - 1] = int(h[i - 1, m - 1]) * run % p
        if weights.any():
            correction = (weights[:, None] * polys[:m - 1] % p).sum(axis=0) % p
            current = (current - correction) % p
        polys[m] = current
    return [int(c) for c in polys[n]]


def symmetric_crt(residues: Sequence[int], primes: Sequence[int]) -> Tuple[int, int]:
    """Combined residue in (-M/2, M/2] and the modulus M"""
    value, modulus = crt(list(primes), [int(r) for r in residues], symmetric=True)
    return int(value), int(modulus)


def crt_accumulate(acc: np.ndarray, modulus: int, residues: np.ndarray, p: int) -> Tuple[np.ndarray, int]:
    """
    Garner step: extend values known mod `modulus` by residues mod p.

    `acc` is an object array of Python ints in [0, modulus).
    """
    inv = pow(modulus % p, -1, p)
    t = ((residues.astype(object) - acc % p) * inv) % p
    return acc + modulus * t, modulus * p


def rational_reconstruction(a: int, m: int) -> Optional[Tuple[int, int]]:
    """
    Find n/d = a (mod m) with |n|, d <= sqrt(m/2).

    Returns (n, d) with d > 0, or None when no such fraction exists.
    """
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    return r1, s1


def coefficient_bound(matrix: np.ndarray) -> int:
    """
    Bound on |coefficients| of the characteristic polynomial.

    Each coefficient is a sum of principal minors, each bounded by the
    Hadamard product of its row norms, and all of them together by
    prod(1 + ||row_i||).
    """
    squares = (np.asarray(matrix, dtype=object) ** 2).sum(axis=1)
    return prod(1 + isqrt(int(s)) + 1 for s in squares)


def hadamard_bound(matrix: np.ndarray) -> int:
    squares = (np.asarray(matrix, dtype=object) ** 2).sum(axis=1)
    return prod(isqrt(int(s)) + 1 for s in squares)


def primes_covering(bound: int) -> List[int]:
    """Deterministic primes whose product exceeds 2 * bound"""
    chosen: List[int] = []
    modulus = 1
    for p in descending_primes():
        chosen.append(p)
        modulus *= p
        if modulus > 2 * bound:
            break
    return chosen
