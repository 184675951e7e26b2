"""
Reduced-scale acceptance suite behind `divgraph selftest`.
"""

import time
from typing import Callable, Dict, List, Tuple

import structlog

from divgraph.arith import types_up_to
from divgraph.config import DivGraphConfig
from divgraph.domain import CheckResult, SelftestReport
from divgraph.exactla import charpoly, eval_multiplicity, nullity
from divgraph.exceptions import VerificationError
from divgraph.graph import (
    build,
    clique_number,
    connectivity_checks,
    counts,
    edge_count_by_divisor_sums,
    independence_number,
    min_degree_analysis,
    omega_coloring,
    planarity_class,
    planarity_oracle,
)

from .checks import VERIFY_CHECKS, CheckContext

logger = structlog.get_logger("divgraph.cli.selftest")


def _structure(ctx: CheckContext) -> Dict:
    types = types_up_to(24)
    for t in types:
        g = build(t, ctx.config)
        v, e = counts(t)
        if v != g.v or e != g.edge_count or e != edge_count_by_divisor_sums(t):
            return {"passed": False, "type": list(t.exponents), "what": "counts"}
        clique_number(t, ctx.config)
        independence_number(t, ctx.config)
        omega_coloring(t, ctx.config)
        connectivity_checks(t, ctx.config)
        min_degree_analysis(t)
    return {"passed": True, "types": len(types)}


def _planarity(ctx: CheckContext) -> Dict:
    disagreements = []
    types = types_up_to(60)
    for t in types:
        if planarity_class(t).planar != planarity_oracle(build(t, ctx.config), ctx.config):
            disagreements.append(list(t.exponents))
    return {"passed": not disagreements, "types": len(types), "disagreements": disagreements}


def _spectral_consistency(ctx: CheckContext) -> Dict:
    mismatches = []
    types = types_up_to(24)
    for t in types:
        adjacency = build(t, ctx.config).adjacency
        f = charpoly(adjacency, config=ctx.config)
        for lam in (-2, -1, 0, 1, 2):
            certified = nullity(adjacency, eigenvalue=lam, seed=ctx.seed, config=ctx.config).nullity
            if certified != eval_multiplicity(f, lam):
                mismatches.append({"type": list(t.exponents), "eigenvalue": lam})
    return {"passed": not mismatches, "types": len(types), "mismatches": mismatches}


def _registry(name: str, **overrides) -> Callable[[CheckContext], Dict]:
    def run(ctx: CheckContext) -> Dict:
        local = CheckContext(**{**ctx.__dict__, **overrides})
        report = VERIFY_CHECKS[name](local)
        return {"passed": report.passed, "results": len(report.results)}
    return run


SELFTEST_CHECKS: List[Tuple[str, Callable[[CheckContext], Dict]]] = [
    ("structure", _structure),
    ("planarity", _planarity),
    ("spectral-consistency", _spectral_consistency),
    ("thm-main", _registry("thm-main", battery_max_vertices=12)),
    ("thm-main2", _registry("thm-main2", battery_max_vertices=12)),
    ("mobius", _registry("mobius", mobius_omega_max=5)),
    ("minus-one", _registry("minus-one", minus_one_max_vertices=24)),
    ("det-period", _registry("det-period", a_max=11)),
    ("mod6", _registry("mod6", a_max=13)),
    ("kernel-pq", _registry("kernel-pq", kernel_pairs=((1, 1), (1, 7), (7, 7)), six_case_vs=(1, 7))),
    ("poset-lift", _registry("poset-lift", poset_count=8, poset_max_size=6,
                             squared_poset_count=2, squared_poset_max_size=4)),
    ("tables", _registry("tables", omega_max=6)),
    ("oeis", _registry("oeis", omega_max=6)),
]


def run_selftest(config: DivGraphConfig, seed: int, jobs: int = 1) -> SelftestReport:
    """
    Run every check, recording failures instead of stopping at the first one.

    Raises:
        SizeGuardError: a check needs more than the configured guards allow
    """
    ctx = CheckContext(config=config, seed=seed, jobs=jobs)
    results = []
    for check_id, check in SELFTEST_CHECKS:
        started = time.perf_counter()
        try:
            detail = check(ctx)
            passed = bool(detail.pop("passed"))
        except VerificationError as e:
            detail, passed = {"error": type(e).__name__, "message": str(e)}, False
        elapsed = round(time.perf_counter() - started, 3)
        log = logger.info if passed else logger.error
        log("🧪 Selftest check finished", check=check_id, passed=passed, elapsed=elapsed)
        results.append(CheckResult(check_id=check_id, passed=passed, elapsed_seconds=elapsed, detail=detail))
    return SelftestReport(passed=all(r.passed for r in results), seed=seed, checks=results)
