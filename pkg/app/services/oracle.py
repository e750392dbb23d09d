"""
Brute-force materialization of graded pieces of the diagonal algebras and of B_s.

Used to cross-check every character and trace computation against explicit matrices.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Optional, Tuple, Union

from app.core.config import settings
from app.core.exceptions import ConsistencyError, PartitionSizeMismatchError, ResourceLimitError, SizeLimitError
from app.models.combinat import CycleType, NumericalPartition
from app.models.diag_algebra import VariantTag
from app.models.oracle import ExplicitGradedPiece, OracleCell, OracleReport
from app.services import bmodule, characters, combinat, diag_algebra
from app.utils.matrix_helper import MatrixHelper

logger = logging.getLogger(__name__)

B_VARIANT = "b"

Key = Tuple[combinat.Blocks, Tuple[int, ...]]


def act(sigma: combinat.Permutation, key: Key) -> Key:
    """
    Relabel a monomial: the block K with exponent e goes to sigma(K) with exponent e
    """
    blocks, exponents = key
    moved = sorted(
        (tuple(sorted(sigma[x - 1] for x in block)), exponent) for block, exponent in zip(blocks, exponents)
    )
    return tuple(b for b, _ in moved), tuple(e for _, e in moved)


def _sign(sigma: combinat.Permutation) -> int:
    return combinat.class_data(combinat.cycle_type_of(sigma))[2]


def build_piece(s: int, variant: Union[VariantTag, str], n: int) -> ExplicitGradedPiece:
    """
    Materialize a graded piece.

    Args:
        s: Number of points, at most ORACLE_MAX_POINTS
        variant: A VariantTag, or "b" for B_s (A'' in internal degree n + s, sign twisted)
        n: Degree of the piece

    Returns:
        Basis monomials and the signed action of the transpositions (k, k+1)
    """
    if not 1 <= s <= settings.ORACLE_MAX_POINTS:
        raise SizeLimitError("s", s, 1, settings.ORACLE_MAX_POINTS)
    twisted = variant == B_VARIANT
    algebra = VariantTag.ADOUBLEPRIME if twisted else VariantTag(variant)
    internal = n + s if twisted else n
    keys = diag_algebra.monomial_basis_keys(algebra, s, internal) if internal >= 0 else []
    if len(keys) > settings.ORACLE_BASIS_CAP:
        raise ResourceLimitError(
            f"piece s={s}, n={n} has {len(keys)} basis monomials, cap is {settings.ORACLE_BASIS_CAP}",
            {"s": s, "n": n, "size": len(keys), "cap": settings.ORACLE_BASIS_CAP},
        )
    index = {key: i for i, key in enumerate(keys)}
    sign = -1 if twisted else 1
    actions = []
    for k in range(1, s):
        transposition = tuple(k + 1 if x == k else k if x == k + 1 else x for x in range(1, s + 1))
        actions.append([(index[act(transposition, key)], sign) for key in keys])
    basis = [diag_algebra.monomial_from_blocks(s, blocks, exponents) for blocks, exponents in keys]
    logger.debug(f"Built piece s={s}, variant={variant}, n={n} of dimension {len(keys)}")
    return ExplicitGradedPiece(
        s=s,
        variant=B_VARIANT if twisted else algebra.value,
        n=n,
        internal_degree=internal,
        twisted=twisted,
        basis=basis,
        generator_actions=actions,
    )


def apply(piece: ExplicitGradedPiece, sigma: combinat.Permutation) -> List[Tuple[int, int]]:
    """
    Signed permutation rho(sigma) on the basis, as (target, sign) per basis vector
    """
    index = {m.key(): i for i, m in enumerate(piece.basis)}
    sign = _sign(sigma) if piece.twisted else 1
    return [(index[act(sigma, m.key())], sign) for m in piece.basis]


def explicit_trace(piece: ExplicitGradedPiece, sigma: combinat.Permutation) -> int:
    sign = _sign(sigma) if piece.twisted else 1
    return sign * sum(1 for m in piece.basis if act(sigma, m.key()) == m.key())


def orbits(piece: ExplicitGradedPiece) -> List[List[int]]:
    """
    Orbits of Sy_s on the basis, as connected components under the generator action
    """
    seen = [False] * piece.dimension
    result = []
    for start in range(piece.dimension):
        if seen[start]:
            continue
        seen[start] = True
        component = [start]
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for action in piece.generator_actions:
                target = action[current][0]
                if not seen[target]:
                    seen[target] = True
                    component.append(target)
                    frontier.append(target)
        result.append(sorted(component))
    return result


@lru_cache(maxsize=None)
def _all_permutations(s: int) -> Tuple[Tuple[combinat.Permutation, int, Tuple[int, ...]], ...]:
    # (sigma, sign, cycle type parts)
    result = []
    for sigma in permutations(range(1, s + 1)):
        mu = combinat.cycle_type_of(sigma)
        result.append((sigma, combinat.class_data(mu)[2], mu.parts))
    return tuple(result)


def _orbit_signature(key: Key) -> Tuple:
    # orbits with equal signatures have conjugate stabilizers, hence isomorphic modules
    blocks, exponents = key
    classes: Dict[Tuple[int, int], int] = {}
    for block, exponent in zip(blocks, exponents):
        classes[(len(block), exponent)] = classes.get((len(block), exponent), 0) + 1
    return tuple(sorted((size, count) for (size, _), count in classes.items()))


def _signature_representative(signature: Tuple) -> Key:
    # consecutive blocks, one exponent per (size, count) class
    blocks, exponents, start = [], [], 1
    for group, (size, count) in enumerate(signature):
        for _ in range(count):
            blocks.append(tuple(range(start, start + size)))
            exponents.append(group)
            start += size
    return tuple(blocks), tuple(exponents)


@lru_cache(maxsize=1024)
def _orbit_isotypic_rank(s: int, signature: Tuple, twisted: bool, lam: Tuple[int, ...]) -> int:
    return _projector_rank(s, _signature_representative(signature), twisted, lam)


def _projector_rank(s: int, representative: Key, twisted: bool, lam: Tuple[int, ...]) -> int:
    partition = NumericalPartition.model_construct(parts=lam)
    elements: Dict[Key, int] = {representative: 0}
    members = [representative]
    for sigma, _, _ in _all_permutations(s):
        image = act(sigma, representative)
        if image not in elements:
            elements[image] = len(members)
            members.append(image)
    size = len(members)
    matrix = [[0] * size for _ in range(size)]
    for sigma, sign, parts in _all_permutations(s):
        weight = characters.irreducible_character(partition, CycleType.model_construct(parts=parts))
        if not weight:
            continue
        if twisted:
            weight *= sign
        for column, key in enumerate(members):
            matrix[elements[act(sigma, key)]][column] += weight
    return MatrixHelper.rank(matrix, size)


def isotypic_dims_explicit(piece: ExplicitGradedPiece, lam: NumericalPartition) -> int:
    """
    Multiplicity of lambda in the piece, from the rank of the isotypic projector.

    The projector sum_sigma chi(sigma) rho(sigma) is block diagonal along the orbits of
    the basis; its rank divided by f^lambda is the multiplicity.
    """
    if lam.size != piece.s:
        raise PartitionSizeMismatchError(lam.size, piece.s)
    total_rank = 0
    for orbit in orbits(piece):
        signature = _orbit_signature(piece.basis[orbit[0]].key())
        total_rank += _orbit_isotypic_rank(piece.s, signature, piece.twisted, lam.parts)
    f = characters.dimension(lam)
    multiplicity = Fraction(total_rank, f)
    if multiplicity.denominator != 1:
        raise ConsistencyError(
            f"projector rank {total_rank} is not a multiple of f^lambda = {f}",
            {"partition": lam.label(), "rank": total_rank},
        )
    return int(multiplicity)


def cross_validate(s: int, min_deg: int, max_deg: int) -> OracleReport:
    """
    Compare the explicit construction of B_s with the character pipeline on a window.

    For each degree: isotypic multiplicities against B_lambda, and traces of class
    representatives against sign(mu) times the A'' graded trace.
    """
    if not 1 <= s <= settings.ORACLE_MAX_POINTS:
        raise SizeLimitError("s", s, 1, settings.ORACLE_MAX_POINTS)
    series = {lam.parts: bmodule.b_lambda_series(lam, max_deg) for lam in combinat.partitions_of(s)}
    traces = diag_algebra.class_traces(VariantTag.ADOUBLEPRIME, s, max(max_deg + s, 0))
    cells: List[OracleCell] = []
    checked = 0
    failure: Optional[str] = None
    for n in range(min_deg, max_deg + 1):
        piece = build_piece(s, B_VARIANT, n)
        row = []
        for lam in combinat.partitions_of(s):
            explicit = isotypic_dims_explicit(piece, lam)
            expected = series[lam.parts].coefficient(n)
            checked += 1
            row.append([lam.label(), str(explicit)])
            if explicit != expected and failure is None:
                failure = f"degree {n}, partition {lam}: explicit {explicit}, character route {expected}"
        for mu in combinat.cycle_types_of(s):
            explicit = explicit_trace(piece, combinat.representative(mu))
            _, _, sign = combinat.class_data(mu)
            expected = sign * traces[mu.parts].coefficient(n + s) if n + s >= 0 else 0
            checked += 1
            if explicit != expected and failure is None:
                failure = f"degree {n}, class {mu}: explicit trace {explicit}, graded trace {expected}"
        cells.append(OracleCell(degree=n, dimension=piece.dimension, multiplicities=row))
    passed = failure is None
    if passed:
        logger.info(f"Oracle agrees with the character pipeline for s={s} on [{min_deg}, {max_deg}]")
    else:
        logger.warning(f"Oracle mismatch for s={s}: {failure}")
    return OracleReport(
        s=s, min_deg=min_deg, max_deg=max_deg, passed=passed, checked_cells=checked, first_failure=failure, cells=cells
    )
