"""
Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from app.core.config import settings
from app.core.exceptions import ConsistencyError, PartitionSizeMismatchError, SizeLimitError
from app.models.characters import CharacterTableResponse, ClassFunction
from app.models.combinat import CycleType, NumericalPartition
from app.services import combinat

logger = logging.getLogger(__name__)


def _shape_from_beta(beta: Tuple[int, ...]) -> Tuple[int, ...]:
    ordered = sorted(beta, reverse=True)
    n = len(ordered)
    return tuple(p for p in (b - (n - 1 - i) for i, b in enumerate(ordered)) if p > 0)


@lru_cache(maxsize=None)
def _murnaghan_nakayama(shape: Tuple[int, ...], cycles: Tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    n = len(shape)
    beta = [part + (n - 1 - i) for i, part in enumerate(shape)]
    occupied = set(beta)
    total = 0
    # removing a border strip of length k moves one bead k positions down
    for bead in beta:
        target = bead - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for b in beta if target < b < bead)
        moved = tuple(target if b == bead else b for b in beta)
        value = _murnaghan_nakayama(_shape_from_beta(moved), rest)
        total += -value if height % 2 else value
    return total


def irreducible_character(lam: NumericalPartition, mu: CycleType) -> int:
    """
    Value of the irreducible character chi^lam on the class with cycle type mu.

    Args:
        lam: Partition labelling the irreducible; (s) is the trivial representation
        mu: Cycle type of the same size

    Returns:
        The integer character value
    """
    if lam.size != mu.size:
        raise PartitionSizeMismatchError(lam.size, mu.size)
    return _murnaghan_nakayama(lam.parts, tuple(sorted(mu.parts, reverse=True)))


def dimension(lam: NumericalPartition) -> int:
    """
    Hook length formula for f^lam
    """
    conjugate = combinat.conjugate(lam).parts
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (conjugate[j] - i - 1) + 1
    return factorial(lam.size) // hooks


def character_function(lam: NumericalPartition) -> ClassFunction:
    return ClassFunction(
        lam.size,
        {mu.parts: irreducible_character(lam, mu) for mu in combinat.cycle_types_of(lam.size)},
    )


def multiplicity(f: ClassFunction, lam: NumericalPartition) -> Fraction:
    """
    Inner product <f, chi^lam> over Sy_s.

    Args:
        f: Class function on Sy_s
        lam: Partition of s

    Returns:
        The exact rational multiplicity; an integer whenever f is a character
    """
    if f.s != lam.size:
        raise PartitionSizeMismatchError(lam.size, f.s)
    total = Fraction(0)
    for parts, value in f.items():
        mu = CycleType.model_construct(parts=parts)
        _, class_size, _ = combinat.class_data(mu)
        total += class_size * irreducible_character(lam, mu) * value
    return total / factorial(f.s)


def integral_multiplicity(f: ClassFunction, lam: NumericalPartition) -> int:
    value = multiplicity(f, lam)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            f"multiplicity of {lam} is {value}, not a nonnegative integer",
            {"partition": lam.label(), "value": str(value)},
        )
    return int(value)


def character_table(s: int) -> CharacterTableResponse:
    """
    Character table of Sy_s with partitions and classes in reverse lexicographic order.
    """
    if not 1 <= s <= settings.CHARACTER_CAP:
        raise SizeLimitError("s", s, 1, settings.CHARACTER_CAP)
    partitions = combinat.partitions_of(s)
    classes = combinat.cycle_types_of(s)
    rows = [[irreducible_character(lam, mu) for mu in classes] for lam in partitions]
    logger.info(f"Built character table of Sy_{s} ({len(partitions)} irreducibles)")
    return CharacterTableResponse(
        s=s,
        partitions=[lam.label() for lam in partitions],
        classes=[mu.label() for mu in classes],
        class_sizes=[combinat.class_data(mu)[1] for mu in classes],
        dimensions=[dimension(lam) for lam in partitions],
        rows=rows,
    )
