"""
The graded Sy_s-module B_s and its isotypic pieces B_lambda.

B_s is the sign twist of the A'' submodule of the diagonal algebra, shifted down by s:
cohomological degree n sits in internal degree n + s.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from app.core.exceptions import DegenerateInputError, UnsupportedPartitionError
from app.models.bmodule import BSeriesResponse
from app.models.characters import ClassFunction
from app.models.combinat import CycleType, NumericalPartition
from app.models.diag_algebra import VariantTag
from app.models.series import LaurentWindow, sum_series
from app.services import characters, combinat, diag_algebra
from app.services.series import check_max_degree, geometric_product
from app.utils.converter import Converter

logger = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def _trace_table(s: int, internal_max_deg: int) -> Dict[Tuple[int, ...], LaurentWindow]:
    return diag_algebra.class_traces(VariantTag.ADOUBLEPRIME, s, internal_max_deg)


def b_graded_character(
    s: int, n: int, traces: Optional[Dict[Tuple[int, ...], LaurentWindow]] = None
) -> ClassFunction:
    """
    Character of Sy_s on the degree-n piece of B_s.

    Args:
        s: Number of points
        n: Cohomological degree
        traces: Precomputed A'' traces exact through internal degree n + s

    Returns:
        sign(mu) times the coefficient of q^(n + s) in the A'' trace of mu
    """
    combinat.check_ground_size(s)
    if (n - s) % 2 or n + s < 0:
        return ClassFunction(s)
    table = traces if traces is not None else _trace_table(s, n + s)
    values = {}
    for mu in combinat.cycle_types_of(s):
        _, _, sign = combinat.class_data(mu)
        values[mu.parts] = sign * table[mu.parts].coefficient(n + s)
    return ClassFunction(s, values)


def b_lambda_series(lam: NumericalPartition, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of B_lambda = Hom(lambda, B_s) through degree max_deg
    """
    check_max_degree(max_deg)
    s = lam.size
    if s == 0:
        return LaurentWindow.one()
    traces = _trace_table(s, max(max_deg + s, 0))
    coefficients = {}
    for n in range(-s, max_deg + 1):
        if (n - s) % 2:
            continue
        value = characters.integral_multiplicity(b_graded_character(s, n, traces), lam)
        if value:
            coefficients[n] = value
    logger.info(f"B series of {lam} through degree {max_deg}: {len(coefficients)} nonzero degrees")
    return LaurentWindow.from_coefficients(coefficients, max_deg)


def total_series(s: int, max_deg: int) -> LaurentWindow:
    """
    Dimension series of B_s, the identity trace of A'' shifted by -s
    """
    return diag_algebra.variant_hilbert_series(VariantTag.ADOUBLEPRIME, s, max_deg + s).shift(-s)


def hodge_type(lam: NumericalPartition, n: int) -> Tuple[int, int]:
    """
    Hodge type (d, d) of the degree-n part of B_lambda, with 2d = n + |lambda|
    """
    if (n + lam.size) % 2:
        raise DegenerateInputError(
            f"degree {n} of B{lam} is zero: parity differs from |lambda| = {lam.size}",
            {"partition": lam.label(), "degree": n},
        )
    d = (n + lam.size) // 2
    return d, d


def hodge_table(lam: NumericalPartition, series: LaurentWindow) -> List[List[int]]:
    return [[n, hodge_type(lam, n)[0]] for n, _ in series.coefficients()]


def extreme_closed_forms(lam: NumericalPartition, max_deg: int) -> LaurentWindow:
    """
    Closed forms of B_(s) and B_(1^s) that bypass the character computation.

    Args:
        lam: Either the one-row partition (s) or the one-column partition (1^s)
        max_deg: Last degree of the exact window

    Returns:
        q^(s^2 + 2s) prod_(i <= s) (1 - q^(2i))^-1 for (s); for (1^s) the sum over
        block types of q^-s prod_k q^(2 l_k max(2, k - 1)) prod_(j <= l_k) (1 - q^(2j))^-1
    """
    s = lam.size
    if s and lam.length == 1:
        return geometric_product(s * s + 2 * s, list(range(1, s + 1)), max_deg)
    if s and all(part == 1 for part in lam.parts):
        pieces = []
        for block_type in combinat.partitions_of(s):
            shift = -s
            orbit_lengths: List[int] = []
            for k, count in block_type.multiplicities().items():
                shift += 2 * count * max(2, k - 1)
                orbit_lengths.extend(range(1, count + 1))
            pieces.append(geometric_product(shift, orbit_lengths, max_deg))
        return sum_series(pieces).restrict(max_deg)
    raise UnsupportedPartitionError(
        f"closed forms cover only (s) and (1^s), got {lam}", {"partition": lam.label()}
    )


def untwisted_multiplicity(lam: NumericalPartition, n: int) -> Fraction:
    """
    Multiplicity of lambda in the degree-n piece of B_s before the sign twist
    """
    s = lam.size
    twisted = b_graded_character(s, n)
    untwisted = {}
    for parts, value in twisted.items():
        _, _, sign = combinat.class_data(CycleType.model_construct(parts=parts))
        untwisted[parts] = sign * value
    return characters.multiplicity(ClassFunction(s, untwisted), lam)


def lowest_degree(s: int) -> int:
    """
    Smallest degree any B_lambda with |lambda| = s can start in: the least A'' shift minus s
    """
    return min(
        diag_algebra.minimal_degree_by_type(VariantTag.ADOUBLEPRIME, block_type)
        for block_type in combinat.partitions_of(s)
    ) - s


def dimension_check(s: int, max_deg: int) -> Optional[int]:
    """
    First degree where sum_lambda f^lambda * B_lambda differs from the dimension of B_s
    """
    total = total_series(s, max_deg)
    weighted: Dict[int, int] = {}
    for lam in combinat.partitions_of(s):
        f = characters.dimension(lam)
        for n, value in b_lambda_series(lam, max_deg).coefficients():
            weighted[n] = weighted.get(n, 0) + f * value
    for n in range(-s, max_deg + 1):
        if weighted.get(n, 0) != total.coefficient(n):
            return n
    return None


def series_response(lam: NumericalPartition, max_deg: int, hodge: bool = False) -> BSeriesResponse:
    series = b_lambda_series(lam, max_deg)
    return BSeriesResponse(
        partition=lam.label(),
        hodge=hodge_table(lam, series) if hodge else None,
        **Converter.series_fields(series),
    )
