"""
Elementary arithmetic functions mapping a concrete n to its factorization type and divisors.

Factorization is delegated to sympy (trial division, Pollard rho, ...), which is
more than enough for the 64-bit integers accepted here.
"""

from math import comb, prod
from typing import Iterable, List, Optional, Sequence

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime, prime

from divgraph.domain import Factorization, FactorizationType, PrimePower
from divgraph.exceptions import InvalidInputError

MAX_INTEGER = 2 ** 64


def _check_positive(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    if n >= MAX_INTEGER:
        raise InvalidInputError(f"n must fit in 64 bits, got {n}")
    return n


def factor(n: int) -> Factorization:
    """Prime factorization with primes strictly increasing; factor(1) is the empty product"""
    _check_positive(n)
    pairs = sorted(factorint(n).items())
    return Factorization(n=n, factors=tuple(PrimePower(prime=int(p), exponent=int(a)) for p, a in pairs))


def factorization_type(n: int) -> FactorizationType:
    return FactorizationType.of(f.exponent for f in factor(n).factors)


def big_omega(n: int) -> int:
    return sum(f.exponent for f in factor(n).factors)


def small_omega(n: int) -> int:
    return len(factor(n).factors)


def mobius(n: int) -> int:
    factors = factor(n).factors
    if any(f.exponent >= 2 for f in factors):
        return 0
    return -1 if len(factors) % 2 else 1


def divisors(n: int) -> List[int]:
    """All positive divisors of n in ascending order"""
    _check_positive(n)
    return [int(d) for d in _sympy_divisors(n)]


def divisor_count(n: int) -> int:
    return prod(f.exponent + 1 for f in factor(n).factors)


def divisor_sum_of_counts(n: int) -> int:
    """
    sum_{b | n} d(b), the number of pairs b | c | n.

    Multiplicative with value C(a+2, 2) at p^a.
    """
    return prod(comb(f.exponent + 2, 2) for f in factor(n).factors)


def instantiate(ftype: FactorizationType, primes: Optional[Sequence[int]] = None) -> int:
    """
    An integer of the given factorization type.

    Without explicit primes this is the smallest such integer: the largest
    exponent goes to the smallest prime.
    """
    exponents = list(ftype.exponents)
    if primes is None:
        primes = [int(prime(i + 1)) for i in range(len(exponents))]
        exponents = sorted(exponents, reverse=True)
    elif len(primes) != len(exponents):
        raise InvalidInputError(f"need {len(exponents)} primes for type {ftype}, got {len(primes)}")
    elif len(set(primes)) != len(primes) or not all(isprime(p) for p in primes):
        raise InvalidInputError(f"primes must be distinct primes, got {list(primes)}")
    return prod(p ** a for p, a in zip(primes, exponents))


def mobius_sum(m: int) -> int:
    """sum_{d | m} mu(d): 1 for m = 1, else 0"""
    return sum(mobius(d) for d in divisors(m))


def squarefree_integer(omega: int, primes: Optional[Iterable[int]] = None) -> int:
    """Product of the first omega primes (or of the given ones)"""
    if primes is None:
        return prod(int(prime(i + 1)) for i in range(omega))
    return prod(primes)


def types_up_to(max_vertices: int) -> List[FactorizationType]:
    """Every factorization type with prod(a_i + 1) <= max_vertices, () first"""
    found: List[FactorizationType] = []

    def extend(prefix: List[int], smallest: int, size: int) -> None:
        found.append(FactorizationType.of(prefix))
        a = smallest
        while size * (a + 1) <= max_vertices:
            extend(prefix + [a], a, size * (a + 1))
            a += 1

    if max_vertices >= 1:
        extend([], 1, 1)
    return found
