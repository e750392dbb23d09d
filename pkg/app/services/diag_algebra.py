"""
The diagonal algebra on generators u_I and its exponent-restricted submodules.

Products are computed in normal form: the partition of a product is the join of the
factors' partitions and each merged block carries the sum of the exponents it absorbed.
"""
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import ConsistencyError, GroundSizeMismatchError, PartitionSizeMismatchError
from app.models.combinat import CycleType, NumericalPartition, SetPartition
from app.models.diag_algebra import AlgebraElement, InvariantSeriesResponse, PartitionMonomial, VariantTag
from app.models.series import LaurentWindow, sum_series
from app.services import combinat
from app.services.series import geometric_product
from app.utils.converter import Converter

logger = logging.getLogger(__name__)

Blocks = combinat.Blocks


def monomial_from_blocks(size: int, blocks: Blocks, exponents: Sequence[int]) -> PartitionMonomial:
    return PartitionMonomial.model_construct(
        partition=SetPartition.model_construct(size=size, blocks=blocks),
        exponents=tuple(exponents),
    )


def multiply(m1: PartitionMonomial, m2: PartitionMonomial) -> PartitionMonomial:
    """
    Product of two normal-form monomials.

    Args:
        m1: First monomial
        m2: Second monomial on the same ground set

    Returns:
        The normal form on join(P1, P2) with exponents summed inside each join block
    """
    if m1.size != m2.size:
        raise GroundSizeMismatchError(m1.size, m2.size)
    s = m1.size
    joined = combinat.join_blocks(s, m1.partition.blocks, m2.partition.blocks)
    position = {}
    for index, block in enumerate(joined):
        for element in block:
            position[element] = index
    exponents = [0] * len(joined)
    for monomial in (m1, m2):
        for block, exponent in zip(monomial.partition.blocks, monomial.exponents):
            exponents[position[block[0]]] += exponent
    return monomial_from_blocks(s, joined, exponents)


def multiply_elements(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.size != y.size:
        raise GroundSizeMismatchError(x.size, y.size)
    product: Dict[PartitionMonomial, Fraction] = {}
    for m1, c1 in x.terms():
        for m2, c2 in y.terms():
            m = multiply(m1, m2)
            product[m] = product.get(m, Fraction(0)) + c1 * c2
    return AlgebraElement(x.size, product)


def unit(s: int) -> PartitionMonomial:
    finest = SetPartition.finest(s)
    return monomial_from_blocks(s, finest.blocks, [0] * s)


def u_block(s: int, block: Iterable[int]) -> PartitionMonomial:
    """
    Generator u_I of degree two; for a singleton {i} this is u_i
    """
    chosen = tuple(sorted(set(block)))
    if not chosen or chosen[0] < 1 or chosen[-1] > s:
        raise GroundSizeMismatchError(max(chosen, default=0), s)
    blocks = combinat.canonical_blocks([chosen] + [(x,) for x in range(1, s + 1) if x not in chosen])
    exponents = [1 if b == chosen else 0 for b in blocks]
    return monomial_from_blocks(s, blocks, exponents)


def u(s: int, i: int) -> PartitionMonomial:
    return u_block(s, (i,))


def power(m: PartitionMonomial, n: int) -> PartitionMonomial:
    result = unit(m.size)
    for _ in range(n):
        result = multiply(result, m)
    return result


def a_block(s: int, block: Iterable[int]) -> PartitionMonomial:
    """
    a_I = u_I^(|I| - 1); a_{i} is the unit
    """
    chosen = tuple(sorted(set(block)))
    return power(u_block(s, chosen), len(chosen) - 1)


def a_partition(p: SetPartition) -> PartitionMonomial:
    return monomial_from_blocks(p.size, p.blocks, [len(b) - 1 for b in p.blocks])


def variant_member(m: PartitionMonomial, variant: VariantTag) -> bool:
    return all(
        exponent >= variant.minimal_exponent(len(block))
        for block, exponent in zip(m.partition.blocks, m.exponents)
    )


def variant_shift(variant: VariantTag, blocks: Blocks) -> int:
    """
    Degree of the lowest monomial of the variant supported on a partition
    """
    return 2 * sum(variant.minimal_exponent(len(b)) for b in blocks)


def variant_hilbert_series(variant: VariantTag, s: int, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of the variant on s points, exact through max_deg.

    Each set partition P contributes q^shift(P) / (1 - q^2)^(#blocks).
    """
    contributions = Counter(
        (variant_shift(variant, blocks), len(blocks)) for blocks in combinat.set_partition_blocks(s)
    )
    return sum_series(
        geometric_product(shift, [1] * count, max_deg).scale(multiplicity)
        for (shift, count), multiplicity in sorted(contributions.items())
    )


def _trace_contributions(mu: CycleType, variant: VariantTag) -> Counter:
    sigma = combinat.representative(mu)
    contributions: Counter = Counter()
    for blocks in combinat.set_partition_blocks(mu.size):
        orbits = combinat.block_orbit_lengths(sigma, blocks)
        if orbits is None:
            continue
        contributions[(variant_shift(variant, blocks), tuple(sorted(orbits)))] += 1
    return contributions


def graded_trace(mu: CycleType, variant: VariantTag, s: int, max_deg: int) -> LaurentWindow:
    """
    Graded trace of a permutation of cycle type mu on the variant.

    Args:
        mu: Cycle type of the permutation
        variant: Which submodule of the diagonal algebra
        s: Number of points
        max_deg: Last degree of the exact window

    Returns:
        Sum over the partitions fixed by the permutation of q^shift over the
        product of (1 - q^(2|o|))^-1 across the orbits o of the permutation on blocks
    """
    if mu.size != s:
        raise PartitionSizeMismatchError(mu.size, s)
    contributions = _trace_contributions(mu, variant)
    logger.debug(f"Trace of class {mu} on {variant.value}: {len(contributions)} orbit types")
    return sum_series(
        geometric_product(shift, list(orbits), max_deg).scale(count)
        for (shift, orbits), count in sorted(contributions.items())
    )


def average_over_classes(s: int, traces: Dict[Tuple[int, ...], LaurentWindow], max_deg: int) -> LaurentWindow:
    """
    (1/s!) sum_mu |class(mu)| * traces[mu], with every coefficient checked to be integral
    """
    total: Dict[int, int] = {}
    for parts, trace in traces.items():
        _, class_size, _ = combinat.class_data(CycleType.model_construct(parts=parts))
        for degree, value in trace.coefficients():
            total[degree] = total.get(degree, 0) + class_size * value
    order = factorial(s)
    averaged = {}
    for degree, value in total.items():
        quotient = Fraction(value, order)
        if quotient.denominator != 1:
            raise ConsistencyError(
                f"class average in degree {degree} is {quotient}, not an integer",
                {"degree": degree, "value": str(quotient), "s": s},
            )
        averaged[degree] = int(quotient)
    return LaurentWindow.from_coefficients(averaged, max_deg)


def class_traces(variant: VariantTag, s: int, max_deg: int) -> Dict[Tuple[int, ...], LaurentWindow]:
    classes = combinat.cycle_types_of(s)
    if settings.MAX_WORKERS > 1:
        with ThreadPoolExecutor(max_workers=settings.MAX_WORKERS) as executor:
            traces = list(executor.map(lambda mu: graded_trace(mu, variant, s, max_deg), classes))
    else:
        traces = [graded_trace(mu, variant, s, max_deg) for mu in classes]
    return {mu.parts: trace for mu, trace in zip(classes, traces)}


def invariant_series(variant: VariantTag, s: int, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of the Sy_s-invariants by averaging graded traces over the classes.
    """
    result = average_over_classes(s, class_traces(variant, s, max_deg), max_deg)
    logger.info(f"Invariant series of {variant.value} on {s} points through degree {max_deg}")
    return result


def invariant_series_by_type(variant: VariantTag, s: int, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of the invariants from the partition types 1^(l_1) 2^(l_2) ... of s.

    Type contributes prod_k q^(2 m(k) l_k) prod_{j <= l_k} (1 - q^(2j))^-1.
    """
    pieces = []
    for block_type in combinat.partitions_of(s):
        shift = 0
        orbit_lengths: List[int] = []
        for k, count in block_type.multiplicities().items():
            shift += 2 * variant.minimal_exponent(k) * count
            orbit_lengths.extend(range(1, count + 1))
        pieces.append(geometric_product(shift, orbit_lengths, max_deg))
    return sum_series(pieces).restrict(max_deg)


def _compositions(total: int, lower: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    # exponent vectors e with e_i >= lower_i and sum e = total
    if not lower:
        if total == 0:
            yield ()
        return
    head, rest = lower[0], lower[1:]
    for first in range(head, total - sum(rest) + 1):
        for tail in _compositions(total - first, rest):
            yield (first,) + tail


def monomial_basis_keys(variant: VariantTag, s: int, degree: int) -> List[Tuple[Blocks, Tuple[int, ...]]]:
    if degree % 2:
        return []
    keys = []
    for blocks in combinat.set_partition_blocks(s):
        lower = [variant.minimal_exponent(len(b)) for b in blocks]
        for exponents in _compositions(degree // 2, lower):
            keys.append((blocks, exponents))
    return keys


def monomial_basis(variant: VariantTag, s: int, degree: int) -> List[PartitionMonomial]:
    """
    All variant-member normal-form monomials of the given internal degree
    """
    return [monomial_from_blocks(s, blocks, exponents) for blocks, exponents in monomial_basis_keys(variant, s, degree)]


def relation_defects(s: int) -> List[str]:
    """
    Evaluate the presentation relations of the diagonal algebra in the normal-form model.

    Checks u_I u_J = u_i u_{I u J}, (u_i - u_j) a_I = 0 and a_I a_J = u_i^(|I n J| - 1) a_{I u J}
    for every pair of overlapping subsets and i, j in the overlap.

    Returns:
        Human-readable descriptions of every failing relation; empty when all hold
    """
    combinat.check_ground_size(s, cap=min(settings.SET_PARTITION_CAP, 6))
    subsets = [
        subset for size in range(1, s + 1) for subset in combinations(range(1, s + 1), size)
    ]
    defects = []
    for block in subsets:
        for i in block:
            for j in block:
                if multiply(u(s, i), a_block(s, block)) != multiply(u(s, j), a_block(s, block)):
                    defects.append(f"u_{i} a_{block} != u_{j} a_{block}")
    for left in subsets:
        for right in subsets:
            overlap = sorted(set(left) & set(right))
            if not overlap:
                continue
            union = tuple(sorted(set(left) | set(right)))
            i = overlap[0]
            if multiply(u_block(s, left), u_block(s, right)) != multiply(u(s, i), u_block(s, union)):
                defects.append(f"u_{left} u_{right} != u_{i} u_{union}")
            expected = multiply(power(u(s, i), len(overlap) - 1), a_block(s, union))
            if multiply(a_block(s, left), a_block(s, right)) != expected:
                defects.append(f"a_{left} a_{right} != u_{i}^{len(overlap) - 1} a_{union}")
    if defects:
        logger.warning(f"{len(defects)} presentation relations fail on {s} points")
    return defects


def minimal_degree_by_type(variant: VariantTag, block_type: NumericalPartition) -> int:
    return sum(2 * variant.minimal_exponent(k) for k in block_type.parts)


def series_response(
    variant: VariantTag, s: int, max_deg: int, invariant: bool = False, trace: Optional[CycleType] = None
) -> InvariantSeriesResponse:
    """
    Payload of the a-series command: Hilbert series, invariant series or one graded trace
    """
    if trace is not None:
        series, kind = graded_trace(trace, variant, s, max_deg), "trace"
    elif invariant:
        series, kind = invariant_series(variant, s, max_deg), "invariant"
    else:
        series, kind = variant_hilbert_series(variant, s, max_deg), "hilbert"
    return InvariantSeriesResponse(
        variant=variant,
        s=s,
        kind=kind,
        trace=None if trace is None else trace.label(),
        **Converter.series_fields(series.restrict(max_deg)),
    )
