"""
Betti numbers of the symmetric products of a genus-g curve from Macdonald's presentation.

wedge(V_g)[y] has generators e_1..e_g, f_1..f_g in degree 1 (stored as indices
0..g-1 and g..2g-1) and y in degree 2. The cohomology of Sym^s is the quotient by the
ideal generated by e_I f_J prod_(k in K) (e_k f_k - y) y^q over pairwise disjoint
I, J, K with |I| + |J| + 2|K| + q = s + 1.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import SizeLimitError
from app.models.macdonald import BettiResponse, ExtYAlgebraPiece
from app.utils.matrix_helper import MatrixHelper

logger = logging.getLogger(__name__)

Monomial = Tuple[Tuple[int, ...], int]
Polynomial = Dict[Monomial, int]


def _check_range(g: int, s: int) -> None:
    if not 1 <= g <= settings.MACDONALD_MAX_GENUS:
        raise SizeLimitError("g", g, 1, settings.MACDONALD_MAX_GENUS)
    if not 1 <= s <= settings.MACDONALD_MAX_POINTS:
        raise SizeLimitError("s", s, 1, settings.MACDONALD_MAX_POINTS)


def _wedge(indices: Sequence[int]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    # sign of the sorting permutation, None when an index repeats
    if len(set(indices)) != len(indices):
        return None
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices)) if indices[i] > indices[j])
    return (-1 if inversions % 2 else 1), tuple(sorted(indices))


def basis(g: int, n: int) -> List[Monomial]:
    result = []
    for j in range(n // 2 + 1):
        width = n - 2 * j
        if width > 2 * g:
            continue
        for subset in combinations(range(2 * g), width):
            result.append((subset, j))
    return result


def graded_piece(g: int, s: int, n: int) -> ExtYAlgebraPiece:
    return ExtYAlgebraPiece(g=g, s=s, n=n, basis=basis(g, n))


def _multiply(left: Polynomial, right: Polynomial) -> Polynomial:
    product: Polynomial = {}
    for (xi, a), c1 in left.items():
        for (eta, b), c2 in right.items():
            wedged = _wedge(xi + eta)
            if wedged is None:
                continue
            sign, merged = wedged
            key = (merged, a + b)
            product[key] = product.get(key, 0) + sign * c1 * c2
    return {k: v for k, v in product.items() if v}


@lru_cache(maxsize=None)
def relation_generators(g: int, s: int) -> Tuple[Tuple[int, Tuple[Tuple[Monomial, int], ...]], ...]:
    """
    Ideal generators as (degree, terms), one per admissible (I, J, K, q)
    """
    generators = []
    indices = range(g)
    for size_k in range(0, (s + 1) // 2 + 1):
        for k_set in combinations(indices, size_k):
            rest = [i for i in indices if i not in k_set]
            for size_i in range(0, len(rest) + 1):
                for i_set in combinations(rest, size_i):
                    free = [j for j in rest if j not in i_set]
                    for size_j in range(0, len(free) + 1):
                        q = s + 1 - size_i - size_j - 2 * size_k
                        if q < 0:
                            continue
                        for j_set in combinations(free, size_j):
                            poly: Polynomial = {(tuple(i_set), 0): 1}
                            poly = _multiply(poly, {(tuple(g + j for j in j_set), 0): 1})
                            for k in k_set:
                                poly = _multiply(poly, {((k, g + k), 0): 1, ((), 1): -1})
                            poly = _multiply(poly, {((), q): 1})
                            degree = size_i + size_j + 2 * size_k + 2 * q
                            generators.append((degree, tuple(sorted(poly.items()))))
    logger.debug(f"{len(generators)} relation generators for g={g}, s={s}")
    return tuple(generators)


def relation_rank(g: int, s: int, n: int) -> int:
    """
    Dimension of the degree-n part of the relation ideal
    """
    target = basis(g, n)
    column = {monomial: index for index, monomial in enumerate(target)}
    rows = []
    for degree, terms in relation_generators(g, s):
        if degree > n:
            continue
        for multiplier in basis(g, n - degree):
            product = _multiply(dict(terms), {multiplier: 1})
            if product:
                rows.append({column[m]: c for m, c in product.items()})
    return MatrixHelper.rank_of_sparse(rows, len(target))


def sym_product_betti(g: int, s: int) -> List[int]:
    """
    Betti numbers b_0..b_2s of Sym^s of a genus-g curve.

    Args:
        g: Genus, 1 <= g <= MACDONALD_MAX_GENUS
        s: Symmetric power, 1 <= s <= MACDONALD_MAX_POINTS

    Returns:
        dim of the degree-n part of wedge(V)[y] minus the rank of the relations in degree n
    """
    _check_range(g, s)
    betti = []
    for n in range(2 * s + 1):
        dimension = len(basis(g, n))
        betti.append(dimension if n <= s else dimension - relation_rank(g, s, n))
    logger.info(f"Betti numbers of Sym^{s} for g={g}: {betti}")
    return betti


def betti_total(betti: Sequence[int]) -> int:
    return sum(betti)


def euler_characteristic(betti: Sequence[int]) -> int:
    return sum(b if n % 2 == 0 else -b for n, b in enumerate(betti))


def projective_bundle_total(g: int, s: int) -> Optional[int]:
    """
    Total dimension 2^(2g) (s + 1 - g) expected when s > 2g - 2, None otherwise
    """
    if s <= 2 * g - 2:
        return None
    return 2 ** (2 * g) * (s + 1 - g)


def betti_report(g: int, s: int) -> BettiResponse:
    betti = sym_product_betti(g, s)
    expected_total = projective_bundle_total(g, s)
    return BettiResponse(
        g=g,
        s=s,
        betti=betti,
        total=betti_total(betti),
        euler_characteristic=euler_characteristic(betti),
        poincare_duality=betti == betti[::-1],
        projective_bundle=None if expected_total is None else expected_total == betti_total(betti),
    )
