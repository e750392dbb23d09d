"""
Numerical partitions, set partitions of {1..s}, cycle types and the join of set partitions.
"""
import logging
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import GroundSizeMismatchError, SizeLimitError
from app.models.combinat import CycleType, NumericalPartition, SetPartition

logger = logging.getLogger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]
Permutation = Tuple[int, ...]


def check_ground_size(s: int, cap: Optional[int] = None) -> None:
    limit = settings.SET_PARTITION_CAP if cap is None else cap
    if not 1 <= s <= limit:
        raise SizeLimitError("s", s, 1, limit)


def _restricted_growth_strings(s: int) -> Iterator[List[int]]:
    # a[i] <= 1 + max(a[:i]), a[0] = 0, lexicographic order
    a = [0] * s
    maxima = [0] * s
    while True:
        yield a
        i = s - 1
        while i > 0 and a[i] == maxima[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, s):
            a[j] = 0
        for j in range(i, s):
            maxima[j] = max(maxima[j - 1], a[j])


def _blocks_from_rgs(rgs: Sequence[int]) -> Blocks:
    blocks: List[List[int]] = []
    for element, label in enumerate(rgs, start=1):
        if label == len(blocks):
            blocks.append([element])
        else:
            blocks[label].append(element)
    return tuple(tuple(b) for b in blocks)


@lru_cache(maxsize=None)
def set_partition_blocks(s: int) -> Tuple[Blocks, ...]:
    """
    All set partitions of {1..s} as canonical block tuples, in restricted-growth-string order.
    """
    check_ground_size(s)
    result = tuple(_blocks_from_rgs(rgs) for rgs in _restricted_growth_strings(s))
    logger.debug(f"Enumerated {len(result)} set partitions of {s} points")
    return result


def enumerate_set_partitions(s: int) -> List[SetPartition]:
    """
    Every set partition of {1..s} exactly once, in canonical order.

    Args:
        s: Ground size, 1 <= s <= SET_PARTITION_CAP

    Returns:
        A fresh list of Bell(s) set partitions
    """
    # blocks are canonical by construction
    return [SetPartition.model_construct(size=s, blocks=blocks) for blocks in set_partition_blocks(s)]


def bell_number(s: int) -> int:
    """
    Bell number by the Bell triangle
    """
    row = [1]
    for _ in range(s):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def canonical_blocks(blocks) -> Blocks:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def join_blocks(s: int, left: Blocks, right: Blocks) -> Blocks:
    parent = list(range(s + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for blocks in (left, right):
        for block in blocks:
            root = find(block[0])
            for element in block[1:]:
                other = find(element)
                if other != root:
                    parent[other] = root
    merged: Dict[int, List[int]] = {}
    for element in range(1, s + 1):
        merged.setdefault(find(element), []).append(element)
    return canonical_blocks(merged.values())


def join(p: SetPartition, q: SetPartition) -> SetPartition:
    """
    Finest set partition coarsening both arguments.

    Args:
        p: First set partition
        q: Second set partition on the same ground set

    Returns:
        The join of p and q in the partition lattice
    """
    if p.size != q.size:
        raise GroundSizeMismatchError(p.size, q.size)
    return SetPartition.model_construct(size=p.size, blocks=join_blocks(p.size, p.blocks, q.blocks))


def partition_stats(p: SetPartition) -> Tuple[List[int], int]:
    """
    Block-size counts and codimension of the diagonal of a set partition.

    Returns:
        Tuple of (l, codim) where l[i - 1] is the number of blocks of size i
    """
    counts = [0] * p.size
    for block in p.blocks:
        counts[len(block) - 1] += 1
    return counts, p.size - len(p.blocks)


def partition_type(p: SetPartition) -> NumericalPartition:
    return NumericalPartition(parts=tuple(sorted((len(b) for b in p.blocks), reverse=True)))


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> Tuple[Tuple[int, ...], ...]:
    def generate(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in generate(remaining - first, first):
                yield (first,) + rest

    return tuple(generate(n, n))


def partitions_of(n: int) -> List[NumericalPartition]:
    """
    Numerical partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n)
    """
    return [NumericalPartition.model_construct(parts=parts) for parts in _partitions_of(n)]


def cycle_types_of(n: int) -> List[CycleType]:
    return [CycleType.model_construct(parts=parts) for parts in _partitions_of(n)]


def conjugate(partition: NumericalPartition) -> NumericalPartition:
    parts = partition.parts
    if not parts:
        return partition
    return NumericalPartition(
        parts=tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))
    )


def class_data(mu: CycleType) -> Tuple[int, int, int]:
    """
    Centralizer order, class size and sign of the conjugacy class with cycle type mu.

    Returns:
        Tuple of (z_mu, class_size, sign)
    """
    z = 1
    for k, m in mu.multiplicities().items():
        z *= k ** m * factorial(m)
    s = mu.size
    sign = -1 if (s - mu.length) % 2 else 1
    return z, factorial(s) // z, sign


def representative(mu: CycleType) -> Permutation:
    """
    A permutation with cycle type mu: cycles on consecutive runs (1..mu_1), (mu_1+1..), ...

    The permutation is returned in one-line notation: sigma[i - 1] is the image of i.
    """
    images: List[int] = []
    start = 1
    for length in mu.parts:
        images.extend(list(range(start + 1, start + length)) + [start])
        start += length
    return tuple(images)


def cycle_type_of(sigma: Permutation) -> CycleType:
    seen = [False] * (len(sigma) + 1)
    lengths: List[int] = []
    for start in range(1, len(sigma) + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = sigma[x - 1]
            length += 1
        lengths.append(length)
    return CycleType(parts=tuple(sorted(lengths, reverse=True)))


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """
    (sigma tau)(i) = sigma(tau(i))
    """
    return tuple(sigma[t - 1] for t in tau)


def permute_blocks(sigma: Permutation, blocks: Blocks) -> Blocks:
    return canonical_blocks(tuple(sigma[x - 1] for x in block) for block in blocks)


def apply_permutation(sigma: Permutation, p: SetPartition) -> SetPartition:
    if len(sigma) != p.size:
        raise GroundSizeMismatchError(len(sigma), p.size)
    return SetPartition.model_construct(size=p.size, blocks=permute_blocks(sigma, p.blocks))


def block_orbit_lengths(sigma: Permutation, blocks: Blocks) -> Optional[List[int]]:
    """
    Cycle lengths of sigma acting on the blocks, or None when sigma does not fix the partition.
    """
    index = {}
    for position, block in enumerate(blocks):
        for element in block:
            index[element] = position
    image = []
    for block in blocks:
        target = index[sigma[block[0] - 1]]
        if any(index[sigma[x - 1]] != target for x in block[1:]):
            return None
        if len(blocks[target]) != len(block):
            return None
        image.append(target)
    if sorted(image) != list(range(len(blocks))):
        return None
    seen = [False] * len(blocks)
    lengths = []
    for start in range(len(blocks)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = image[x]
            length += 1
        lengths.append(length)
    return lengths
