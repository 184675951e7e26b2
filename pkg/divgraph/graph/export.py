"""
DOT export of D_n.
"""

from math import prod
from typing import List, Literal, Optional

from sympy import prime

from divgraph.exceptions import InvalidInputError

from .model import DivGraph

LabelStyle = Literal["divisor", "exponent", "field"]


def divisor_labels(g: DivGraph) -> List[int]:
    """
    Divisor values; graphs built from a type use the smallest integer of
    that type (largest exponent on the smallest prime).
    """
    if g.labels is not None:
        return g.labels
    primes = [int(prime(g.d - i)) for i in range(g.d)]
    return [prod(p ** e for p, e in zip(primes, x)) for x in g.vertices]


def field_labels(g: DivGraph, base_prime: int = 2) -> List[str]:
    """F_{p^m} for each divisor m: the subfield of F_{p^n} of degree m"""
    return [f"F_{{{base_prime}^{m}}}" for m in divisor_labels(g)]


def to_dot(g: DivGraph, labels: LabelStyle = "divisor", base_prime: int = 2,
           name: Optional[str] = None) -> str:
    """Undirected DOT text, vertices and edges in canonical index order"""
    if labels == "divisor":
        names = [str(m) for m in divisor_labels(g)]
    elif labels == "exponent":
        names = ["(" + ",".join(str(c) for c in x) + ")" for x in g.vertices]
    elif labels == "field":
        names = field_labels(g, base_prime)
    else:
        raise InvalidInputError(f"unknown label style {labels!r}")

    title = name or f"D_{g.ftype.label()}"
    lines = [f'graph "{title}" {{']
    for k, label in enumerate(names):
        lines.append(f'  {k} [label="{label}"];')
    adj = g.adjacency
    for i in range(g.v):
        for j in range(i + 1, g.v):
            if adj[i, j]:
                lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
