from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class NumericalPartition(BaseModel):
    """
    A numerical partition lambda = (lambda_1 >= lambda_2 >= ... > 0).
    """
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...]

    @field_validator("parts")
    @classmethod
    def check_parts(cls, parts: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers, got {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be nonincreasing, got {list(parts)}")
        return parts

    @classmethod
    def of(cls, *parts: int) -> "NumericalPartition":
        return cls(parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "NumericalPartition":
        """
        Parse a comma-separated list such as "2,1,1"
        """
        stripped = text.strip()
        if not stripped:
            return cls(parts=())
        return cls(parts=tuple(int(piece) for piece in stripped.split(",")))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> Dict[int, int]:
        """
        Exponential notation: part k -> number of parts equal to k
        """
        counts: Dict[int, int] = {}
        for part in self.parts:
            counts[part] = counts.get(part, 0) + 1
        return counts

    def label(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return f"({self.label()})"


class CycleType(NumericalPartition):
    """
    Cycle lengths of a permutation of {1..s}; indexes the conjugacy classes of Sy_s.
    """


class SetPartition(BaseModel):
    """
    A partition of {1..size} into disjoint nonempty blocks.

    Blocks are sorted tuples, ordered by their least element.
    """
    model_config = ConfigDict(frozen=True)

    size: int
    blocks: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_blocks(self) -> "SetPartition":
        if self.size < 1:
            raise ValueError(f"ground size must be positive, got {self.size}")
        seen: List[int] = sorted(x for block in self.blocks for x in block)
        if seen != list(range(1, self.size + 1)):
            raise ValueError(f"blocks {self.blocks} do not partition 1..{self.size}")
        if any(not block or list(block) != sorted(block) for block in self.blocks):
            raise ValueError("blocks must be nonempty sorted tuples")
        if [b[0] for b in self.blocks] != sorted(b[0] for b in self.blocks):
            raise ValueError("blocks must be ordered by least element")
        return self

    @classmethod
    def from_blocks(cls, size: int, blocks) -> "SetPartition":
        """
        Build the canonical form from blocks given in any order
        """
        canonical = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return cls(size=size, blocks=canonical)

    @classmethod
    def finest(cls, size: int) -> "SetPartition":
        return cls.model_construct(size=size, blocks=tuple((i,) for i in range(1, size + 1)))

    @classmethod
    def coarsest(cls, size: int) -> "SetPartition":
        return cls.model_construct(size=size, blocks=(tuple(range(1, size + 1)),))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"
