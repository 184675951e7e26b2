"""
Shared domain entities and report models
"""

from .entities import BigInt, ExponentVector, PrimePower, Factorization, FactorizationType
from .reports import (
    DegreeProfile,
    CliqueWitness,
    IndependenceWitness,
    Coloring,
    ConnectivityReport,
    PlanarityReport,
    NullityCertificate,
    KernelWitness,
    VmSpace,
    SpectrumReport,
    DivisibilityReport,
    PosetLiftReport,
    ObservationReport,
    TableRow,
    CheckResult,
    SelftestReport,
    InfoReport,
    CharpolyReport,
    TableReport,
    VerifyReport,
)

__all__ = [
    "BigInt",
    "ExponentVector",
    "PrimePower",
    "Factorization",
    "FactorizationType",
    "DegreeProfile",
    "CliqueWitness",
    "IndependenceWitness",
    "Coloring",
    "ConnectivityReport",
    "PlanarityReport",
    "NullityCertificate",
    "KernelWitness",
    "VmSpace",
    "SpectrumReport",
    "DivisibilityReport",
    "PosetLiftReport",
    "ObservationReport",
    "TableRow",
    "CheckResult",
    "SelftestReport",
    "InfoReport",
    "CharpolyReport",
    "TableReport",
    "VerifyReport",
]
