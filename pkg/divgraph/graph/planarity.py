"""
Planarity of D_n.

D_n is planar exactly for the types (), (1), (2), (3), (1,1), (1,2). Every
other type contains a divisor of type (4), (1,3), (2,2) or (1,1,1), each
carrying an explicit Kuratowski witness. planarity_oracle is an independent
left-right planarity test from networkx.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import structlog

from divgraph.config import DivGraphConfig, resolve_config
from divgraph.domain import ExponentVector, FactorizationType, PlanarityReport
from divgraph.exceptions import VerificationError, check_guard

from .model import DivGraph, TypeLike, coerce_type, comparable
from .structure import counts

logger = structlog.get_logger("divgraph.graph")

PLANAR_TYPES = {(), (1,), (2,), (3,), (1, 1), (1, 2)}


@dataclass(frozen=True)
class Witness:
    """
    Kuratowski witness in the coordinates of a minimal nonplanar type.

    For K5 kinds `branch` holds the five branch vertices and `paths` the
    subdivided branch pairs with their interior vertices; for K33 `branch`
    holds side A followed by side B.
    """

    kind: str
    subtype: Tuple[int, ...]
    branch: Tuple[ExponentVector, ...]
    paths: Dict[Tuple[ExponentVector, ExponentVector], Tuple[ExponentVector, ...]] = field(default_factory=dict)

    @property
    def subdivision(self) -> List[ExponentVector]:
        return [x for path in self.paths.values() for x in path]


# coordinates follow the canonical (nondecreasing) order of each subtype
MINIMAL_WITNESSES = (
    # K5 = D_{p^4}
    Witness("K5", (4,), ((0,), (1,), (2,), (3,), (4,))),
    # coordinates (q, p): {1, p, q} x {pq, p^2 q, p^3 q}
    Witness("K33", (1, 3), ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (1, 3))),
    # coordinates (p, q): {1, p^2 q, p^2 q^2, q, p}, p - pq - q subdivided
    Witness("K5-subdivision", (2, 2), ((0, 0), (2, 1), (2, 2), (0, 1), (1, 0)),
            {((1, 0), (0, 1)): ((1, 1),)}),
    # coordinates (p, q, r): {1, pqr, pq, r, p}, pq - q - qr - r and r - pr - p subdivided
    Witness("K5-subdivision", (1, 1, 1),
            ((0, 0, 0), (1, 1, 1), (1, 1, 0), (0, 0, 1), (1, 0, 0)),
            {((1, 1, 0), (0, 0, 1)): ((0, 1, 0), (0, 1, 1)),
             ((0, 0, 1), (1, 0, 0)): ((1, 0, 1),)}),
)


def witness_holds(w: Witness) -> bool:
    """Check the witness edges by divisibility of the exponent vectors"""
    if w.kind == "K33":
        side_a, side_b = w.branch[:3], w.branch[3:]
        return all(comparable(x, y) for x in side_a for y in side_b)
    for i, x in enumerate(w.branch):
        for y in w.branch[i + 1:]:
            path = w.paths.get((x, y)) or tuple(reversed(w.paths.get((y, x), ())))
            walk = (x, *path, y)
            if not all(comparable(a, b) for a, b in zip(walk, walk[1:])):
                return False
    used = list(w.branch) + w.subdivision
    return len(set(used)) == len(used)


def _embedding(subtype: Sequence[int], exponents: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Distinct coordinates of the type able to host each subtype coordinate"""
    for chosen in permutations(range(len(exponents)), len(subtype)):
        if all(exponents[c] >= b for c, b in zip(chosen, subtype)):
            return chosen
    return None


def _lift_vector(x: ExponentVector, coords: Sequence[int], d: int) -> ExponentVector:
    lifted = [0] * d
    for c, value in zip(coords, x):
        lifted[c] = value
    return tuple(lifted)


def planarity_class(t: TypeLike) -> PlanarityReport:
    """
    Planarity from the classification, with a Kuratowski witness when nonplanar.

    Also reports whether the necessary bound e <= 3v - 6 already fails.

    Raises:
        VerificationError: a nonplanar type has no minimal witness
    """
    ftype = coerce_type(t)
    a = ftype.exponents
    v, e = counts(ftype)
    bound_violated = v >= 3 and e > 3 * v - 6

    if a in PLANAR_TYPES:
        return PlanarityReport(type=list(a), planar=True, reason="planar type",
                               edge_bound_violated=bound_violated)

    candidates = sorted(MINIMAL_WITNESSES, key=lambda w: (w.subtype != a, sum(w.subtype)))
    for w in candidates:
        coords = _embedding(w.subtype, a)
        if coords is None:
            continue
        if not witness_holds(w):
            raise VerificationError("planarity witness does not hold", {"subtype": list(w.subtype)})
        branch = [_lift_vector(x, coords, ftype.d) for x in w.branch]
        subdivision = [_lift_vector(x, coords, ftype.d) for x in w.subdivision]
        if w.subtype == a:
            reason = f"contains {w.kind}"
            kind = w.kind
        else:
            reason = f"contains nonplanar D_m for divisor m of type {FactorizationType.of(w.subtype)}"
            kind = "minor-type"
        return PlanarityReport(type=list(a), planar=False, reason=reason, witness_kind=kind,
                               witness_vertices=branch, subdivision_vertices=subdivision,
                               offending_subtype=list(w.subtype), edge_bound_violated=bound_violated)

    logger.error("❌ Nonplanar type without witness", type=str(ftype))
    raise VerificationError("no minimal nonplanar divisor type found", {"type": list(a)})


def planarity_oracle(g: DivGraph, config: Optional[DivGraphConfig] = None) -> bool:
    """
    Left-right planarity test (networkx.check_planarity).

    Raises:
        SizeGuardError: v > planarity_max_vertices
    """
    config = resolve_config(config if config is not None else g.config)
    check_guard("planarity test", g.v, config.planarity_max_vertices, "planarity_max_vertices")
    is_planar, _ = nx.check_planarity(g.to_networkx())
    return bool(is_planar)
