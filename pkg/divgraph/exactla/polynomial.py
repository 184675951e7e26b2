"""
Dense integer polynomials (characteristic polynomials and their quotients).

Coefficients are stored constant term first; arithmetic is delegated to
sympy's dense univariate routines over ZZ.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import ZZ
from sympy.polys.densearith import dup_mul, dup_rr_div, dup_sub

from divgraph.exceptions import InvalidInputError


def _to_dup(coeffs: Sequence[int]) -> list:
    return [ZZ(c) for c in reversed(coeffs)]


def _from_dup(dup: Iterable) -> "IntPolynomial":
    return IntPolynomial([int(c) for c in reversed(list(dup))])


class IntPolynomial:
    """Polynomial in lambda with arbitrary-precision integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [coeff])

    @classmethod
    def linear(cls, root: int) -> "IntPolynomial":
        """lambda - root"""
        return cls([-root, 1])

    @classmethod
    def from_json(cls, values: Sequence[str]) -> "IntPolynomial":
        return cls(int(v) for v in values)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial"""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> int:
        return self._coeffs[-1] if self._coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    def coefficient(self, k: int) -> int:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        return _from_dup(dup_mul(_to_dup(self._coeffs), _to_dup(other._coeffs), ZZ))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return _from_dup(dup_sub(_to_dup(self._coeffs), _to_dup(other._coeffs), ZZ))

    def __pow__(self, exponent: int) -> "IntPolynomial":
        result = IntPolynomial([1])
        for _ in range(exponent):
            result = result * self
        return result

    def divmod(self, divisor: "IntPolynomial") -> Tuple["IntPolynomial", "IntPolynomial"]:
        """Division with remainder over ZZ; exact whenever the divisor is monic"""
        if divisor.is_zero:
            raise InvalidInputError("division by the zero polynomial")
        q, r = dup_rr_div(_to_dup(self._coeffs), _to_dup(divisor._coeffs), ZZ)
        return _from_dup(q), _from_dup(r)

    def to_json(self) -> List[str]:
        return [str(c) for c in self._coeffs]

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "λ" if k == 1 else f"λ^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_divides(f: IntPolynomial, g: IntPolynomial) -> Tuple[bool, Optional[IntPolynomial]]:
    """
    Whether f divides g in ZZ[lambda].

    Returns (True, quotient) on exact division, (False, None) otherwise.
    """
    if f.is_zero:
        raise InvalidInputError("division by the zero polynomial")
    quotient, remainder = g.divmod(f)
    if remainder.is_zero and quotient * f == g:
        return True, quotient
    return False, None


def eval_multiplicity(f: IntPolynomial, root: int) -> int:
    """Largest k with (lambda - root)^k dividing f"""
    if f.is_zero:
        raise InvalidInputError("root multiplicity of the zero polynomial is undefined")
    linear = IntPolynomial.linear(root)
    k = 0
    current = f
    while current.degree >= 1 and current(root) == 0:
        current, _ = current.divmod(linear)
        k += 1
    return k
