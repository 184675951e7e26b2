"""
Exact linear algebra: integer polynomials, characteristic polynomials,
determinants and certified nullities
"""

from .polynomial import IntPolynomial, poly_divides, eval_multiplicity
from .dense import as_int_matrix, shifted, to_domain_matrix, charpoly, determinant, rank, trace
from .nullity import nullity, rational_nullity, kernel_residual_zero, primitive

__all__ = [
    "IntPolynomial",
    "poly_divides",
    "eval_multiplicity",
    "as_int_matrix",
    "shifted",
    "to_domain_matrix",
    "charpoly",
    "determinant",
    "rank",
    "trace",
    "nullity",
    "rational_nullity",
    "kernel_residual_zero",
    "primitive",
]
