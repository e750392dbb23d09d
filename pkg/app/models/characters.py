from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from pydantic import BaseModel

from app.core.exceptions import PartitionSizeMismatchError
from app.models.combinat import CycleType

Number = Union[int, Fraction]


class ClassFunction:
    """
    Rational-valued function on the conjugacy classes of Sy_s, keyed by cycle type.

    Classes missing from `values` are zero.
    """

    __slots__ = ("s", "_values")

    def __init__(self, s: int, values: Dict[Tuple[int, ...], Number] = None):
        self.s = s
        self._values: Dict[Tuple[int, ...], Fraction] = {}
        for parts, value in (values or {}).items():
            if sum(parts) != s:
                raise PartitionSizeMismatchError(sum(parts), s)
            if value:
                self._values[tuple(parts)] = Fraction(value)

    def __call__(self, mu: CycleType) -> Fraction:
        if mu.size != self.s:
            raise PartitionSizeMismatchError(mu.size, self.s)
        return self._values.get(mu.parts, Fraction(0))

    def items(self) -> Iterable[Tuple[Tuple[int, ...], Fraction]]:
        return sorted(self._values.items(), reverse=True)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        if other.s != self.s:
            raise PartitionSizeMismatchError(other.s, self.s)
        merged = dict(self._values)
        for key, value in other._values.items():
            merged[key] = merged.get(key, 0) + value
        return ClassFunction(self.s, merged)

    def scale(self, factor: Number) -> "ClassFunction":
        return ClassFunction(self.s, {k: v * factor for k, v in self._values.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.s == other.s and self._values == other._values

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.items())
        return f"ClassFunction(s={self.s}, {{{body}}})"


class CharacterTableResponse(BaseModel):
    """
    Full character table of Sy_s; rows follow `partitions`, columns follow `classes`.
    """
    s: int
    partitions: List[str]
    classes: List[str]
    class_sizes: List[int]
    dimensions: List[int]
    rows: List[List[int]]
