from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from .entities import BigInt, ExponentVector


class DegreeProfile(BaseModel):
    """Per-vertex degrees of D_n with the minimal-degree analysis."""

    type: List[int]
    degrees: List[int]
    min_degree: int
    minimizers: List[ExponentVector]
    extremal_minimizers: List[ExponentVector]
    # one constant-degree chain per minimizer, ending at an extremal minimizer
    chains: List[List[ExponentVector]]
    # smallest prod_A + prod_B over extremal vertices; min_degree = extremal_min_cost - 2
    extremal_min_cost: int
    # Delta_i(x) = 0 at every nonextremal coordinate of every minimizer
    stability_holds: bool
    chains_hold: bool
    # extremal minimizers are exactly the extremal vertices minimizing prod_A + prod_B
    criterion_holds: bool


class CliqueWitness(BaseModel):
    size: int
    chain: List[ExponentVector]
    indices: List[int]
    brute_force_size: Optional[int] = None


class IndependenceWitness(BaseModel):
    size: int
    antichain: List[ExponentVector]
    indices: List[int]
    brute_force_size: Optional[int] = None


class Coloring(BaseModel):
    colors: List[int]
    num_colors: int
    proper: bool


class ConnectivityReport(BaseModel):
    type: List[int]
    connected: bool
    middle_connected: bool
    bipartite: bool


class PlanarityReport(BaseModel):
    type: List[int]
    planar: bool
    reason: str
    witness_kind: Optional[Literal["K5", "K33", "K5-subdivision", "minor-type"]] = None
    witness_vertices: List[ExponentVector] = Field(default_factory=list)
    subdivision_vertices: List[ExponentVector] = Field(default_factory=list)
    offending_subtype: Optional[List[int]] = None
    edge_bound_violated: bool = False


class NullityCertificate(BaseModel):
    """Certified dimension of ker(M - lambda I) over the rationals."""

    eigenvalue: int = 0
    nullity: int
    method: Literal["rational-exact", "modular-agreement"]
    primes: List[int] = Field(default_factory=list)
    seed: Optional[int] = None
    kernel_verified: bool = False
    # primitive integer kernel basis, omitted from large reports
    kernel_basis: Optional[List[List[BigInt]]] = None


class KernelWitness(BaseModel):
    """An explicit eigenvector, stored in a documented vertex order."""

    eigenvalue: int
    vector: List[BigInt]
    order: str
    # position k of `vector` is canonical vertex permutation[k]
    permutation: List[int]
    residual_zero: bool


class VmSpace(BaseModel):
    m: int
    dimension: int
    basis: List[List[BigInt]]


class SpectrumReport(BaseModel):
    type: List[int]
    v: int
    e: int
    # omitted for table cells and above determinant_max_dim
    det: Optional[BigInt] = None
    multiplicities: Dict[str, int]
    certificates: List[NullityCertificate] = Field(default_factory=list)
    charpoly: Optional[List[BigInt]] = None
    # observations that depend on how the "Omega(n) >= 2" hypothesis is read
    prime_reading: Optional[Dict[str, int]] = None


class DivisibilityReport(BaseModel):
    check: str
    type: List[int]
    lifted_type: List[int]
    divisor: List[BigInt]
    dividend: List[BigInt]
    quotient: List[BigInt]
    divides: bool
    squared: bool = False


class PosetLiftReport(BaseModel):
    size: int
    # P x {0,1} checked for squared divisibility
    squared: bool = False
    f_poset: List[BigInt]
    f_lifted: List[BigInt]
    quotient: List[BigInt]
    divides: bool
    eigenvectors_lifted: int = 0
    rank_preserved: bool = True


class ObservationReport(BaseModel):
    """A falsifiable pattern check; never promoted to a theorem."""

    name: str
    holds: bool
    checked: List[Dict[str, Any]] = Field(default_factory=list)
    mismatches: List[Dict[str, Any]] = Field(default_factory=list)


class TableRow(BaseModel):
    omega: int
    eigenvalue: int
    multiplicity: int


class CheckResult(BaseModel):
    check_id: str
    passed: bool
    elapsed_seconds: float
    detail: Dict[str, Any] = Field(default_factory=dict)


class SelftestReport(BaseModel):
    passed: bool
    seed: int
    checks: List[CheckResult]


class InfoReport(BaseModel):
    """Structural summary printed by `divgraph info`."""

    type: List[int]
    v: int
    e: int
    big_omega: int
    mobius: int
    clique_number: int
    independence_number: int
    chromatic_number: int
    min_degree: int
    degree_distribution: Dict[str, int]
    connected: bool
    middle_connected: bool
    bipartite: bool
    planar: bool
    planarity_reason: str


class CharpolyReport(BaseModel):
    type: List[int]
    v: int
    charpoly: List[BigInt]
    polynomial: str


class TableReport(BaseModel):
    eigenvalues: List[int]
    rows: List[TableRow]
    # rows that disagree with the known squarefree tables
    mismatches: List[Dict[str, int]] = Field(default_factory=list)


class VerifyReport(BaseModel):
    check_id: str
    passed: bool
    results: List[Dict[str, Any]] = Field(default_factory=list)
