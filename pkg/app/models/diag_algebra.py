from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, model_validator

from app.core.exceptions import GroundSizeMismatchError
from app.models.combinat import SetPartition


class VariantTag(str, Enum):
    """
    The diagonal algebra and its submodules, told apart by a lower bound on block exponents
    """
    ATILDE = "atilde"
    A = "a"
    APRIME = "aprime"
    ADOUBLEPRIME = "adoubleprime"

    def minimal_exponent(self, block_size: int) -> int:
        if self is VariantTag.ATILDE:
            return 0 if block_size == 1 else 1
        if self is VariantTag.A:
            return block_size - 1
        if self is VariantTag.APRIME:
            return 2 if block_size == 1 else block_size - 1
        return 2 if block_size <= 2 else block_size - 1


class PartitionMonomial(BaseModel):
    """
    Normal form prod_K u_K^(e_K) over the blocks K of a set partition.

    `exponents[i]` belongs to `partition.blocks[i]`. Singleton blocks {i} carry the
    power of u_i and may have exponent zero; larger blocks need exponent >= 1.
    """
    model_config = ConfigDict(frozen=True)

    partition: SetPartition
    exponents: Tuple[int, ...]

    @model_validator(mode="after")
    def check_exponents(self) -> "PartitionMonomial":
        if len(self.exponents) != len(self.partition.blocks):
            raise ValueError("one exponent per block is required")
        for block, exponent in zip(self.partition.blocks, self.exponents):
            if exponent < 0 or (len(block) > 1 and exponent < 1):
                raise ValueError(f"exponent {exponent} not allowed on block {block}")
        return self

    @property
    def size(self) -> int:
        return self.partition.size

    @property
    def degree(self) -> int:
        return 2 * sum(self.exponents)

    def exponent_of(self, block: Tuple[int, ...]) -> int:
        return self.exponents[self.partition.blocks.index(tuple(block))]

    def key(self) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[int, ...]]:
        return self.partition.blocks, self.exponents

    def __str__(self) -> str:
        factors = []
        for block, exponent in zip(self.partition.blocks, self.exponents):
            if exponent == 0:
                continue
            name = "u_" + "".join(str(x) for x in block) if max(block) < 10 else f"u_{set(block)}"
            factors.append(name if exponent == 1 else f"{name}^{exponent}")
        return "*".join(factors) or "1"


Coefficient = Union[int, Fraction]


class AlgebraElement:
    """
    Rational linear combination of normal-form monomials on a fixed ground set
    """

    __slots__ = ("size", "_terms")

    def __init__(self, size: int, terms: Optional[Dict[PartitionMonomial, Coefficient]] = None):
        self.size = size
        self._terms: Dict[PartitionMonomial, Fraction] = {}
        for monomial, coefficient in (terms or {}).items():
            if monomial.size != size:
                raise GroundSizeMismatchError(monomial.size, size)
            if coefficient:
                self._terms[monomial] = self._terms.get(monomial, Fraction(0)) + Fraction(coefficient)
        self._terms = {m: c for m, c in self._terms.items() if c}

    @classmethod
    def of(cls, monomial: PartitionMonomial, coefficient: Coefficient = 1) -> "AlgebraElement":
        return cls(monomial.size, {monomial: coefficient})

    def terms(self) -> List[Tuple[PartitionMonomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda item: (item[0].degree, item[0].key()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def homogeneous_parts(self) -> Dict[int, "AlgebraElement"]:
        parts: Dict[int, Dict[PartitionMonomial, Fraction]] = {}
        for monomial, coefficient in self._terms.items():
            parts.setdefault(monomial.degree, {})[monomial] = coefficient
        return {degree: AlgebraElement(self.size, terms) for degree, terms in sorted(parts.items())}

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if other.size != self.size:
            raise GroundSizeMismatchError(self.size, other.size)
        merged = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + coefficient
        return AlgebraElement(self.size, merged)

    def scale(self, factor: Coefficient) -> "AlgebraElement":
        return AlgebraElement(self.size, {m: c * factor for m, c in self._terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scale(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.size == other.size and self._terms == other._terms

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{m}" for m, c in self.terms()) or "0"
        return f"AlgebraElement({body})"


class InvariantSeriesResponse(BaseModel):
    """
    Series payload of the diagonal algebras
    """
    variant: VariantTag
    s: int
    kind: str
    trace: Optional[str] = None
    min_deg: int
    max_deg: int
    coefficients: List[List[int]]
