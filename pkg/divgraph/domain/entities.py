from math import prod
from typing import Annotated, Iterable, List, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, field_validator, model_validator


def _coerce_int(value):
    if isinstance(value, str):
        return int(value)
    return value


# Arbitrary-precision integer that travels through JSON as a decimal string
BigInt = Annotated[
    int,
    BeforeValidator(_coerce_int),
    PlainSerializer(lambda v: str(v), return_type=str, when_used="json"),
]

ExponentVector = Tuple[int, ...]


class PrimePower(BaseModel):
    model_config = ConfigDict(frozen=True)

    prime: int
    exponent: int


class Factorization(BaseModel):
    """n = p_1^a_1 ... p_d^a_d with primes strictly increasing."""

    model_config = ConfigDict(frozen=True)

    n: int
    factors: Tuple[PrimePower, ...] = ()

    @model_validator(mode="after")
    def _check_product(self) -> "Factorization":
        primes = [f.prime for f in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(f.exponent < 1 for f in self.factors):
            raise ValueError("exponents must be positive")
        if prod(f.prime ** f.exponent for f in self.factors) != self.n:
            raise ValueError(f"factors do not multiply to {self.n}")
        return self

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(f.prime, f.exponent) for f in self.factors]


class FactorizationType(BaseModel):
    """
    Sorted exponent multiset (a_1 <= ... <= a_d); the empty type stands for n = 1.

    D_n depends only on this type, so every graph-scale computation keys off it.
    """

    model_config = ConfigDict(frozen=True)

    exponents: Tuple[int, ...] = ()

    @field_validator("exponents")
    @classmethod
    def _check_exponents(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(a < 1 for a in value):
            raise ValueError("factorization type parts must be positive")
        if list(value) != sorted(value):
            raise ValueError("factorization type must be nondecreasing")
        return value

    @classmethod
    def of(cls, parts: Iterable[int]) -> "FactorizationType":
        """Build a type from parts in any order"""
        return cls(exponents=tuple(sorted(int(a) for a in parts)))

    @classmethod
    def parse(cls, text: str) -> "FactorizationType":
        """Parse '2,1' or '' (the empty type)"""
        text = text.strip().strip("()[]")
        if not text:
            return cls()
        return cls.of(int(part) for part in text.split(",") if part.strip())

    @property
    def d(self) -> int:
        return len(self.exponents)

    @property
    def big_omega(self) -> int:
        return sum(self.exponents)

    @property
    def vertex_count(self) -> int:
        return prod(a + 1 for a in self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(a == 1 for a in self.exponents)

    @property
    def mobius(self) -> int:
        if not self.is_squarefree:
            return 0
        return -1 if self.d % 2 else 1

    def augmented(self, *parts: int) -> "FactorizationType":
        """The type of n times fresh primes raised to the given exponents"""
        return FactorizationType.of(self.exponents + tuple(parts))

    def label(self) -> str:
        return "(" + ",".join(str(a) for a in self.exponents) + ")"

    def __str__(self) -> str:
        return self.label()
