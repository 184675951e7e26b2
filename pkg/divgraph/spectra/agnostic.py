"""
Spot checks on concrete integers.

The verifiers work on factorization types. These run the same statements
on one integer instance built with build_from_integer, where the fresh
primes p, q are the two smallest primes not dividing n.
"""

from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import structlog
from sympy import nextprime

from divgraph.arith import factorization_type
from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ObservationReport
from divgraph.exactla import charpoly, kernel_residual_zero, poly_divides, shifted
from divgraph.exceptions import InvalidInputError, PreconditionError
from divgraph.graph import build, build_from_integer

from .eigenvectors import minus_one_eigenvector, mobius_eigenvector
from .theorems import verify_f_divides, verify_f_squared_divides

logger = structlog.get_logger("divgraph.spectra")

DEFAULT_INTEGERS: Dict[str, int] = {
    "thm-main": 6,
    "thm-main2": 30,
    "mobius": 30,
    "minus-one": 36,
}


def fresh_primes(n: int) -> Tuple[int, int]:
    """The two smallest primes not dividing n"""
    found: List[int] = []
    p = 1
    while len(found) < 2:
        p = int(nextprime(p))
        if n % p:
            found.append(p)
    return found[0], found[1]


def _divisibility_on_integer(n: int, squared: bool, config: DivGraphConfig) -> Dict:
    p, q = fresh_primes(n)
    f = charpoly(build_from_integer(n, config).adjacency, config=config)
    f_lifted = charpoly(build_from_integer(n * p * q, config).adjacency, config=config)
    divisor = f * f if squared else f
    divides, quotient = poly_divides(divisor, f_lifted)

    by_type = (verify_f_squared_divides if squared else verify_f_divides)(factorization_type(n), config)
    same = divides and list(quotient.coeffs) == by_type.quotient
    return {"n": n, "p": p, "q": q, "divides": divides, "matches_type_route": same}


def _thm_main(n: int, config: DivGraphConfig) -> Dict:
    return _divisibility_on_integer(n, False, config)


def _thm_main2(n: int, config: DivGraphConfig) -> Dict:
    if 1 not in factorization_type(n).exponents:
        raise PreconditionError(f"{n} has no prime dividing it exactly once")
    return _divisibility_on_integer(n, True, config)


def _mobius(n: int, config: DivGraphConfig) -> Dict:
    witness = mobius_eigenvector(n, config)
    g = build(factorization_type(n), config)
    signs = [0 if k in (g.bottom, g.top) else (-1) ** sum(x) for k, x in enumerate(g.vertices)]
    type_holds = kernel_residual_zero(shifted(g.adjacency.astype(np.int64), -2), [signs])
    carried = [0] * g.v
    for k, value in zip(witness.permutation, witness.vector):
        carried[k] = value
    return {"n": n, "divides": witness.residual_zero, "matches_type_route": type_holds and carried == signs}


def _minus_one(n: int, config: DivGraphConfig) -> Dict:
    g = build_from_integer(n, config)
    if g.v < 2:
        raise PreconditionError("-1 needs n >= 2")
    vector = [0] * g.v
    vector[g.bottom], vector[g.top] = 1, -1
    holds = kernel_residual_zero(shifted(g.adjacency.astype(np.int64), -1), [vector])
    by_type = minus_one_eigenvector(factorization_type(n), config)
    permutation = g.canonical_permutation
    carried = [0] * g.v
    for k, value in enumerate(vector):
        carried[permutation[k]] = value
    return {"n": n, "divides": holds, "matches_type_route": by_type.residual_zero and carried == by_type.vector}


SPOT_CHECKS: Dict[str, Callable[[int, DivGraphConfig], Dict]] = {
    "thm-main": _thm_main,
    "thm-main2": _thm_main2,
    "mobius": _mobius,
    "minus-one": _minus_one,
}


def prime_agnostic_spot_check(check: str, n: Optional[int] = None,
                              config: Optional[DivGraphConfig] = None) -> ObservationReport:
    """
    Run a verifier on a concrete integer.

    Args:
        check: one of thm-main, thm-main2, mobius, minus-one
        n: integer to use; defaults to DEFAULT_INTEGERS[check]
        config: guards; defaults to the global configuration
    """
    config = resolve_config(config)
    if check not in SPOT_CHECKS:
        raise InvalidInputError(f"unknown spot check {check!r}; choose from {', '.join(SPOT_CHECKS)}")
    n = DEFAULT_INTEGERS[check] if n is None else n
    entry = SPOT_CHECKS[check](n, config)
    holds = bool(entry["divides"] and entry["matches_type_route"])
    if not holds:
        logger.error("❌ Integer spot check failed", check=check, n=n)
    return ObservationReport(name=f"spot-check {check}", holds=holds, checked=[entry],
                             mismatches=[] if holds else [entry])
