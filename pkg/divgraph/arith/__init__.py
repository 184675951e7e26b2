"""
Arithmetic functions: factorization, factorization types, Omega, omega, Moebius, divisors
"""

from .functions import (
    factor,
    factorization_type,
    big_omega,
    small_omega,
    mobius,
    mobius_sum,
    divisors,
    divisor_count,
    divisor_sum_of_counts,
    instantiate,
    squarefree_integer,
    types_up_to,
)

__all__ = [
    "factor",
    "factorization_type",
    "big_omega",
    "small_omega",
    "mobius",
    "mobius_sum",
    "divisors",
    "divisor_count",
    "divisor_sum_of_counts",
    "instantiate",
    "squarefree_integer",
    "types_up_to",
]
