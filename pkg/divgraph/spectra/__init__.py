"""
Spectral verifiers for D_n: polynomial divisibility, explicit eigenvectors,
multiplicity tables, determinant periodicity and the V_m spaces
"""

from .theorems import verify_f_divides, verify_f_squared_divides, npq_order, block_form_npq
from .eigenvectors import (
    KERNEL_PERIOD,
    mobius_eigenvector,
    minus_one_eigenvector,
    two_prime_order,
    two_prime_matrix,
    kernel_block,
    kernel_vector_two_prime_powers,
    six_case_identities,
)
from .multiplicities import (
    SPECIAL_EIGENVALUES,
    TABLE_VALUES,
    special_multiplicities,
    multiplicity_table,
    table_mismatches,
    oeis_pattern_checks,
    conjecture_scan,
)
from .vm import vm_space, vm_tensor_inclusion
from .determinants import (
    DET_PERIOD,
    M5,
    M5_INVERSE,
    pq_power_matrix,
    det_sequence_pq_power,
    zero_iff_mod6,
    reproduce_m5,
    schur_complement_check,
)
from .agnostic import fresh_primes, prime_agnostic_spot_check

__all__ = [
    "verify_f_divides",
    "verify_f_squared_divides",
    "npq_order",
    "block_form_npq",
    "KERNEL_PERIOD",
    "mobius_eigenvector",
    "minus_one_eigenvector",
    "two_prime_order",
    "two_prime_matrix",
    "kernel_block",
    "kernel_vector_two_prime_powers",
    "six_case_identities",
    "SPECIAL_EIGENVALUES",
    "TABLE_VALUES",
    "special_multiplicities",
    "multiplicity_table",
    "table_mismatches",
    "oeis_pattern_checks",
    "conjecture_scan",
    "vm_space",
    "vm_tensor_inclusion",
    "DET_PERIOD",
    "M5",
    "M5_INVERSE",
    "pq_power_matrix",
    "det_sequence_pq_power",
    "zero_iff_mod6",
    "reproduce_m5",
    "schur_complement_check",
    "fresh_primes",
    "prime_agnostic_spot_check",
]
