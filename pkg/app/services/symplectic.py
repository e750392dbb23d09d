"""
Dimensions of irreducible Sp(2g)-modules and of the Weyl space V^<X>.
"""
import logging
from fractions import Fraction
from math import comb, factorial
from typing import List

from app.core.exceptions import StabilityRangeError
from app.models.combinat import NumericalPartition
from app.models.symplectic import ExteriorPiece, SchurWeylReport, SchurWeylRow, SymplecticContext
from app.services import characters, combinat

logger = logging.getLogger(__name__)


def _weyl_product(shifted: List[int]) -> Fraction:
    value = Fraction(1)
    for i, a in enumerate(shifted):
        value *= a
        for b in shifted[i + 1:]:
            value *= a * a - b * b
    return value


def sp_irrep_dimension(g: int, lam: NumericalPartition) -> int:
    """
    Weyl dimension formula for the rank-g symplectic group.

    Args:
        g: Genus, so that V_g has dimension 2g
        lam: Highest weight as a partition

    Returns:
        dim S<lam>(V_g); zero when lam has more than g parts
    """
    context = SymplecticContext(g=g)
    if lam.length > context.g:
        return 0
    padded = list(lam.parts) + [0] * (g - lam.length)
    rho = [g - i for i in range(g)]
    value = _weyl_product([p + r for p, r in zip(padded, rho)]) / _weyl_product(rho)
    return int(value)


def naive_weyl_space_dimension(g: int, s: int) -> int:
    """
    (2g)^s - C(s, 2) (2g)^(s - 2): correct only while the insertions are independent (s <= 3)
    """
    n = 2 * g
    if s < 2:
        return n ** s
    return n ** s - comb(s, 2) * n ** (s - 2)


def weyl_space_dimension(g: int, s: int) -> int:
    """
    Dimension of the cokernel of the omega-insertions into V^(tensor s).

    Inclusion-exclusion over sets of k disjoint pairs:
    sum_k (-1)^k s! / (k! 2^k (s - 2k)!) (2g)^(s - 2k).
    """
    if g < s:
        raise StabilityRangeError(
            f"the Weyl space identity needs g >= s, got g={g}, s={s}", {"g": g, "s": s}
        )
    n = 2 * g
    total = 0
    for k in range(s // 2 + 1):
        matchings = factorial(s) // (factorial(k) * 2 ** k * factorial(s - 2 * k))
        total += (-1) ** k * matchings * n ** (s - 2 * k)
    return total


def schur_weyl_check(g: int, s: int) -> SchurWeylReport:
    """
    Compare sum_lambda dim S<lambda> * f^lambda with the Weyl space dimension.
    """
    expected = weyl_space_dimension(g, s)
    rows = []
    for lam in combinat.partitions_of(s):
        if lam.length > g:
            continue
        f = characters.dimension(lam)
        sp = sp_irrep_dimension(g, lam)
        rows.append(SchurWeylRow(partition=lam.label(), symmetric_dimension=f, symplectic_dimension=sp, product=f * sp))
    total = sum(row.product for row in rows)
    passed = total == expected
    detail = None
    if not passed:
        detail = f"sum of products {total} differs from the cokernel dimension {expected}"
        logger.warning(f"Schur-Weyl check failed for g={g}, s={s}: {detail}")
    else:
        logger.info(f"Schur-Weyl check passed for g={g}, s={s}: {total}")
    return SchurWeylReport(
        g=g,
        s=s,
        passed=passed,
        weyl_space_dimension=expected,
        naive_dimension=naive_weyl_space_dimension(g, s),
        total=total,
        rows=rows,
        detail=detail,
    )


def exterior_power_decomposition(g: int, s: int) -> List[ExteriorPiece]:
    """
    wedge^s V = sum_(k >= 0) S<1^(j - 2k)> with j = min(s, 2g - s)
    """
    if s > 2 * g or s < 0:
        return []
    j = min(s, 2 * g - s)
    pieces = []
    for k in range(j // 2 + 1):
        column = NumericalPartition(parts=(1,) * (j - 2 * k))
        pieces.append(ExteriorPiece(partition=column.label(), dimension=sp_irrep_dimension(g, column)))
    return pieces
