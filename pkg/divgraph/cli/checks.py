"""
Check registry behind `divgraph verify <check-id>` and `divgraph selftest`.

Each check returns a VerifyReport; VerificationError from a verifier
propagates to the command layer, which maps it to exit code 1.
"""

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from divgraph.arith import squarefree_integer, types_up_to
from divgraph.config import DivGraphConfig
from divgraph.domain import FactorizationType, ObservationReport, TableRow, VerifyReport
from divgraph.exceptions import InvalidInputError
from divgraph.poset import random_poset, verify_poset_lift, verify_poset_squared_lift
from divgraph.spectra import (
    TABLE_VALUES,
    det_sequence_pq_power,
    kernel_vector_two_prime_powers,
    minus_one_eigenvector,
    mobius_eigenvector,
    multiplicity_table,
    oeis_pattern_checks,
    reproduce_m5,
    schur_complement_check,
    six_case_identities,
    table_mismatches,
    verify_f_divides,
    verify_f_squared_divides,
    zero_iff_mod6,
)


@dataclass
class CheckContext:
    config: DivGraphConfig
    ftype: Optional[FactorizationType] = None
    n: Optional[int] = None
    eigenvalues: Optional[List[int]] = None
    omega_max: int = 10
    a_max: int = 29
    # types with prod(a_i + 1) <= 80, so D_npq has at most 320 vertices
    battery_max_vertices: int = 80
    mobius_omega_max: int = 9
    minus_one_max_vertices: int = 1024
    kernel_pairs: Tuple[Tuple[int, int], ...] = ((1, 1), (1, 7), (7, 7), (7, 13), (13, 13))
    six_case_vs: Tuple[int, ...] = (1, 7, 13, 19)
    poset_count: int = 200
    poset_max_size: int = 8
    squared_poset_count: int = 50
    squared_poset_max_size: int = 6
    seed: int = 0
    jobs: int = 1


def _observations(check_id: str, reports: List[ObservationReport]) -> VerifyReport:
    return VerifyReport(check_id=check_id, passed=all(r.holds for r in reports),
                        results=[r.model_dump(mode="json") for r in reports])


def _battery(ctx: CheckContext, squared: bool) -> List[FactorizationType]:
    if ctx.ftype is not None:
        return [ctx.ftype]
    types = types_up_to(ctx.battery_max_vertices)
    return [t for t in types if 1 in t.exponents] if squared else types


def check_thm_main(ctx: CheckContext) -> VerifyReport:
    reports = [verify_f_divides(t, ctx.config) for t in _battery(ctx, squared=False)]
    return VerifyReport(check_id="thm-main", passed=True, results=[r.model_dump(mode="json") for r in reports])


def check_thm_main2(ctx: CheckContext) -> VerifyReport:
    reports = [verify_f_squared_divides(t, ctx.config) for t in _battery(ctx, squared=True)]
    return VerifyReport(check_id="thm-main2", passed=True, results=[r.model_dump(mode="json") for r in reports])


def check_mobius(ctx: CheckContext) -> VerifyReport:
    if ctx.n is not None:
        integers = [ctx.n]
    else:
        integers = [squarefree_integer(w) for w in range(3, ctx.mobius_omega_max + 1, 2)]
    witnesses = [mobius_eigenvector(n, ctx.config) for n in integers]
    return VerifyReport(check_id="mobius", passed=all(w.residual_zero for w in witnesses),
                        results=[w.model_dump(mode="json") for w in witnesses])


def check_minus_one(ctx: CheckContext) -> VerifyReport:
    if ctx.ftype is not None:
        types = [ctx.ftype]
    else:
        types = [t for t in types_up_to(ctx.minus_one_max_vertices) if t.exponents]
    witnesses = [minus_one_eigenvector(t, ctx.config) for t in types]
    return VerifyReport(check_id="minus-one", passed=all(w.residual_zero for w in witnesses),
                        results=[{"type": list(t.exponents), "residual_zero": w.residual_zero}
                                 for t, w in zip(types, witnesses)])


def check_det_period(ctx: CheckContext) -> VerifyReport:
    values = det_sequence_pq_power(ctx.a_max, ctx.config)
    m5 = reproduce_m5(ctx.config)
    schur = schur_complement_check()
    return VerifyReport(check_id="det-period", passed=m5.holds and schur.holds, results=[
        {"determinants": [str(d) for d in values]},
        m5.model_dump(mode="json"),
        schur.model_dump(mode="json"),
    ])


def check_mod6(ctx: CheckContext) -> VerifyReport:
    limit = min(ctx.a_max, ctx.config.mod6_max_a)
    verdicts = [{"a": a, "singular": zero_iff_mod6(a, ctx.seed, ctx.config)} for a in range(limit + 1)]
    return VerifyReport(check_id="mod6", passed=True, results=verdicts)


def check_kernel_pq(ctx: CheckContext) -> VerifyReport:
    if ctx.ftype is not None:
        if len(ctx.ftype.exponents) != 2:
            raise InvalidInputError("kernel-pq needs a type with two parts (u, v)")
        pairs = [ctx.ftype.exponents]
        vs = sorted({v for _, v in pairs})
    else:
        pairs = list(ctx.kernel_pairs)
        vs = sorted(set(ctx.six_case_vs))
    results = []
    for u, v in pairs:
        witness = kernel_vector_two_prime_powers(u, v, ctx.config)
        results.append({"u": u, "v": v, "residual_zero": witness.residual_zero})
    for v in vs:
        results.append(six_case_identities(v, ctx.config).model_dump(mode="json"))
    return VerifyReport(check_id="kernel-pq", passed=True, results=results)


def check_poset_lift(ctx: CheckContext) -> VerifyReport:
    rng = random.Random(ctx.seed)
    largest = min(ctx.poset_max_size, ctx.config.poset_lift_max_size)
    results = []
    for _ in range(ctx.poset_count):
        p = random_poset(rng.randint(1, largest), rng)
        results.append(verify_poset_lift(p, ctx.config).model_dump(mode="json"))
    for _ in range(ctx.squared_poset_count):
        p = random_poset(rng.randint(1, min(ctx.squared_poset_max_size, largest)), rng)
        results.append(verify_poset_squared_lift(p, ctx.config).model_dump(mode="json"))
    return VerifyReport(check_id="poset-lift", passed=True, results=results)


def _tables(ctx: CheckContext) -> Dict[int, Dict[int, int]]:
    eigenvalues = ctx.eigenvalues or sorted(TABLE_VALUES)
    tables: Dict[int, Dict[int, int]] = {}
    for lam in eigenvalues:
        rows = multiplicity_table(lam, ctx.omega_max, jobs=ctx.jobs, seed=ctx.seed, config=ctx.config)
        tables[lam] = {row.omega: row.multiplicity for row in rows}
    return tables


def check_tables(ctx: CheckContext) -> VerifyReport:
    tables = _tables(ctx)
    rows = [TableRow(omega=w, eigenvalue=lam, multiplicity=m) for lam, col in tables.items() for w, m in col.items()]
    mismatches = table_mismatches(rows)
    return VerifyReport(check_id="tables", passed=not mismatches,
                        results=[{"tables": {str(lam): {str(w): m for w, m in col.items()} for lam, col in tables.items()},
                                  "mismatches": mismatches}])


def check_oeis(ctx: CheckContext) -> VerifyReport:
    return _observations("oeis", oeis_pattern_checks(_tables(ctx)))


VERIFY_CHECKS: Dict[str, Callable[[CheckContext], VerifyReport]] = {
    "thm-main": check_thm_main,
    "thm-main2": check_thm_main2,
    "mobius": check_mobius,
    "minus-one": check_minus_one,
    "det-period": check_det_period,
    "mod6": check_mod6,
    "kernel-pq": check_kernel_pq,
    "poset-lift": check_poset_lift,
    "tables": check_tables,
    "oeis": check_oeis,
}
