"""
Certified multiplicities of the integer eigenvalues -2, -1, 0, 1 and the
tables over squarefree n.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import structlog
from sympy import catalan

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import FactorizationType, ObservationReport, SpectrumReport, TableRow
from divgraph.exactla import charpoly, determinant, nullity
from divgraph.exceptions import InvalidInputError, VerificationError
from divgraph.graph import TypeLike, build, coerce_type, counts

logger = structlog.get_logger("divgraph.spectra")

SPECIAL_EIGENVALUES = (-2, -1, 0, 1)

# multiplicity of each eigenvalue in D_n for squarefree n with omega(n) = 2..13
TABLE_VALUES: Dict[int, Dict[int, int]] = {
    -2: dict(zip(range(2, 14), (0, 2, 0, 10, 0, 42, 0, 170, 0, 682, 0, 2730))),
    -1: dict(zip(range(2, 14), (1, 3, 4, 10, 15, 35, 56, 126, 212, 462, 814, 1716))),
    1: dict(zip(range(2, 14), (0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0, 429))),
    0: dict(zip(range(2, 14), (1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132, 0))),
}


def _consistency_failures(ftype: FactorizationType, m: Dict[int, int]) -> List[str]:
    failures = []
    mu = ftype.mobius
    if mu == -1 and ftype.big_omega >= 2:
        if m.get(-2, 1) < 1:
            failures.append("mu(n) = -1 with Omega(n) >= 2 but -2 is not an eigenvalue")
        if m.get(1, 1) < 1:
            failures.append("mu(n) = -1 with Omega(n) >= 2 but 1 is not an eigenvalue")
    if mu == 1 and m.get(0, 1) < 1:
        failures.append("mu(n) = 1 but 0 is not an eigenvalue")
    if ftype.vertex_count >= 2 and m.get(-1, 1) < 1:
        failures.append("n >= 2 but -1 is not an eigenvalue")
    if sum(m.values()) > ftype.vertex_count:
        failures.append("multiplicities exceed the number of vertices")
    return failures


def special_multiplicities(t: TypeLike, eigenvalues: Sequence[int] = SPECIAL_EIGENVALUES,
                           seed: Optional[int] = None, with_determinant: bool = True,
                           with_charpoly: bool = False,
                           config: Optional[DivGraphConfig] = None) -> SpectrumReport:
    """
    m_lambda = certified dim ker(M - lambda I) for each requested lambda.

    Args:
        t: factorization type
        eigenvalues: integers to certify
        seed: prime-selection seed; defaults to config.seed
        with_determinant: compute det(M) when the guard allows it
        with_charpoly: attach the characteristic polynomial
        config: guards; defaults to the global configuration

    Raises:
        SizeGuardError: v > max_vertices
        VerificationError: a multiplicity contradicts the eigenvalue results
    """
    config = resolve_config(config)
    ftype = coerce_type(t)
    g = build(ftype, config)
    adjacency = g.adjacency
    v, e = counts(ftype)

    started = time.perf_counter()
    certificates = [nullity(adjacency, eigenvalue=lam, seed=seed, config=config)
                    for lam in dict.fromkeys(int(x) for x in eigenvalues)]
    m = {c.eigenvalue: c.nullity for c in certificates}

    prime_reading = None
    if ftype.big_omega == 1:
        # n prime: D_n = K_2 has eigenvalues 1 and -1, and the Moebius vector is zero
        for lam in (-2, 1):
            if lam not in m:
                m_extra = nullity(adjacency, eigenvalue=lam, seed=seed, config=config).nullity
            else:
                m_extra = m[lam]
            prime_reading = {**(prime_reading or {}), str(lam): m_extra}

    failures = _consistency_failures(ftype, m)
    if failures:
        logger.error("❌ Multiplicity consistency failed", type=str(ftype), failures=failures)
        raise VerificationError(f"multiplicities of type {ftype} are inconsistent", {"failures": failures})

    det = None
    if m.get(0, 0) > 0:
        det = 0
    elif with_determinant and v <= config.determinant_max_dim:
        det = determinant(adjacency, config=config)

    poly = None
    if with_charpoly:
        poly = list(charpoly(adjacency, config=config).coeffs)

    logger.info("📊 Multiplicities certified", type=str(ftype), v=v,
                multiplicities=m, elapsed=round(time.perf_counter() - started, 3))
    return SpectrumReport(
        type=list(ftype.exponents),
        v=v,
        e=e,
        det=det,
        multiplicities={str(lam): k for lam, k in m.items()},
        certificates=certificates,
        charpoly=poly,
        prime_reading=prime_reading,
    )


def _table_cell(args: Tuple[int, int, int, dict]) -> TableRow:
    omega, eigenvalue, seed, config_values = args
    config = DivGraphConfig.from_dict(config_values)
    report = special_multiplicities((1,) * omega, [eigenvalue], seed=seed,
                                    with_determinant=False, config=config)
    return TableRow(omega=omega, eigenvalue=eigenvalue, multiplicity=report.multiplicities[str(eigenvalue)])


def multiplicity_table(eigenvalue: int, omega_max: int, omega_min: int = 2, jobs: Optional[int] = None,
                       seed: Optional[int] = None, config: Optional[DivGraphConfig] = None) -> List[TableRow]:
    """
    m_lambda of D_n for squarefree n with omega_min <= omega(n) <= omega_max.

    Cells are independent; with jobs > 1 they run in worker processes and
    come back in omega order.
    """
    config = resolve_config(config)
    if omega_min < 1 or omega_max < omega_min:
        raise InvalidInputError(f"invalid omega range {omega_min}..{omega_max}")
    jobs = config.jobs if jobs is None else jobs
    seed = config.seed if seed is None else seed
    cells = [(omega, eigenvalue, seed, config.to_dict()) for omega in range(omega_min, omega_max + 1)]

    logger.info("📋 Generating multiplicity table", eigenvalue=eigenvalue,
                omega_range=[omega_min, omega_max], jobs=jobs)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_table_cell, cells))
    return [_table_cell(cell) for cell in cells]


def table_mismatches(rows: Iterable[TableRow]) -> List[Dict[str, int]]:
    """Rows that disagree with the known table values"""
    bad = []
    for row in rows:
        expected = TABLE_VALUES.get(row.eigenvalue, {}).get(row.omega)
        if expected is not None and expected != row.multiplicity:
            bad.append({"omega": row.omega, "eigenvalue": row.eigenvalue,
                        "expected": expected, "computed": row.multiplicity})
    return bad


def oeis_pattern_checks(tables: Dict[int, Dict[int, int]]) -> List[ObservationReport]:
    """
    Sequence patterns in the squarefree tables, as observations:

    * m_{-2} at odd omega follows x_{k+1} = 4 x_k + 2 from x = 2
    * m_1 at omega = 2k + 1 is Catalan(k + 1)
    * m_0 at omega = 2k is Catalan(k)

    Args:
        tables: eigenvalue -> {omega: multiplicity}
    """
    reports = []

    minus_two = tables.get(-2, {})
    checked, mismatches = [], []
    expected = 2
    for omega in range(3, max(minus_two, default=0) + 1, 2):
        if omega not in minus_two:
            break
        entry = {"omega": omega, "expected": expected, "computed": minus_two[omega]}
        checked.append(entry)
        if minus_two[omega] != expected:
            mismatches.append(entry)
        expected = 4 * expected + 2
    reports.append(ObservationReport(name="m(-2) recurrence x -> 4x + 2", holds=not mismatches,
                                     checked=checked, mismatches=mismatches))

    for eigenvalue, parity, offset, name in ((1, 1, 1, "m(1) Catalan"), (0, 0, 0, "m(0) Catalan")):
        column = tables.get(eigenvalue, {})
        checked, mismatches = [], []
        for omega in sorted(column):
            if omega < 2 or omega % 2 != parity:
                continue
            k = omega // 2 + offset
            entry = {"omega": omega, "expected": int(catalan(k)), "computed": column[omega]}
            checked.append(entry)
            if column[omega] != entry["expected"]:
                mismatches.append(entry)
        reports.append(ObservationReport(name=name, holds=not mismatches, checked=checked, mismatches=mismatches))

    for report in reports:
        if not report.holds:
            logger.warning("⚠️ Sequence pattern falsified", pattern=report.name, mismatches=report.mismatches)
    return reports


def conjecture_scan(omega_max: int, omega_min: int = 2, seed: Optional[int] = None,
                    config: Optional[DivGraphConfig] = None) -> List[ObservationReport]:
    """
    Scan the squarefree types for the patterns
    "-2 (and 1) is an eigenvalue iff mu(n) = -1" and "0 is an eigenvalue iff mu(n) = 1".
    """
    config = resolve_config(config)
    patterns = {
        "-2 eigenvalue iff mu(n) = -1": (-2, -1),
        "1 eigenvalue iff mu(n) = -1": (1, -1),
        "0 eigenvalue iff mu(n) = 1": (0, 1),
    }
    observations = {name: ([], []) for name in patterns}
    for omega in range(omega_min, omega_max + 1):
        ftype = FactorizationType.of((1,) * omega)
        report = special_multiplicities(ftype, SPECIAL_EIGENVALUES, seed=seed,
                                        with_determinant=False, config=config)
        for name, (eigenvalue, mu) in patterns.items():
            present = report.multiplicities[str(eigenvalue)] >= 1
            predicted = ftype.mobius == mu
            entry = {"omega": omega, "eigenvalue_present": present, "predicted": predicted}
            observations[name][0].append(entry)
            if present != predicted:
                observations[name][1].append(entry)
    return [ObservationReport(name=name, holds=not bad, checked=checked, mismatches=bad)
            for name, (checked, bad) in observations.items()]
