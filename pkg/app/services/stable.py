"""
Stable cohomology Hilbert series: base model, stable ranges, twisted and decorated
series, the invariant algebras C_infinity / C'_infinity and the Abel-Jacobi identity.
"""
import logging
from typing import Dict, List, Optional

from app.core.config import settings
from app.core.exceptions import (
    IncompatibleSeriesError,
    InvalidBaseModelError,
    SizeLimitError,
    StabilityRangeError,
    UnsupportedPartitionError,
)
from app.models.combinat import NumericalPartition
from app.models.diag_algebra import VariantTag
from app.models.series import LaurentWindow, first_difference, sum_series
from app.models.stable import (
    AbelJacobiConvention,
    AbelJacobiLevel,
    AbelJacobiReport,
    AgreementReport,
    CSeriesResponse,
    CutoffContext,
    CVariant,
    NPolicy,
    Provenance,
    StableModel,
    StableSeriesResponse,
)
from app.services import bmodule, diag_algebra
from app.services.series import check_max_degree, geometric_product
from app.utils.converter import Converter

logger = logging.getLogger(__name__)


def default_model() -> StableModel:
    return StableModel(provenance=Provenance.FREE_POLYNOMIAL)


def unit_model() -> StableModel:
    return StableModel(provenance=Provenance.USER_SUPPLIED, base=LaurentWindow.one())


def user_model(coefficients: Dict[int, int], max_deg: int, exact: bool = False) -> StableModel:
    """
    Build a user-supplied model, checking the invariants every base series must satisfy.

    Args:
        coefficients: Degree -> dimension of the stable cohomology
        max_deg: Last degree the coefficients are known in
        exact: True when all higher coefficients vanish

    Returns:
        The validated model
    """
    if any(degree < 0 for degree in coefficients):
        raise InvalidBaseModelError("base series has a term in negative degree", {"degrees": sorted(coefficients)})
    if any(value < 0 for value in coefficients.values()):
        raise InvalidBaseModelError("base series has a negative coefficient")
    if coefficients.get(0) != 1:
        raise InvalidBaseModelError(
            f"degree-0 coefficient must be 1, got {coefficients.get(0, 0)}", {"degree": 0}
        )
    if coefficients.get(1, 0) != 0:
        raise InvalidBaseModelError("degree-1 coefficient must vanish", {"degree": 1})
    base = LaurentWindow.from_coefficients(coefficients, max_deg, truncated=not exact)
    return StableModel(provenance=Provenance.USER_SUPPLIED, base=base)


def base_series(model: StableModel, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of the stable cohomology under the chosen model, through max_deg
    """
    check_max_degree(max_deg)
    if model.base is not None:
        return model.base.restrict(max_deg)
    return geometric_product(0, list(range(1, max(max_deg, 0) // 2 + 1)), max_deg).restrict(max_deg)


def stable_range(policy: NPolicy, g: int) -> int:
    if g < 2:
        raise StabilityRangeError(f"stable ranges need g >= 2, got g={g}", {"g": g})
    return policy.bound(g)


def stable_cutoff(policy: NPolicy, g: int, context: CutoffContext = CutoffContext.TWISTED, size: int = 0) -> int:
    """
    Degree bound up to which the stable identification holds.

    Args:
        policy: Which published bound N(g) to use
        g: Genus
        context: Which identification; `size` is |lambda| or the number of points
        size: |lambda| for twisted coefficients, s for point-based contexts

    Returns:
        N(g) - |lambda|, N(g), min(2s, N(g)) or min(s, N(g)) by context
    """
    n = stable_range(policy, g)
    if context is CutoffContext.TWISTED:
        return n - size
    if context is CutoffContext.SYMMETRIC_PRODUCT:
        return min(2 * size, n)
    if context is CutoffContext.ABEL_JACOBI:
        return min(size, n)
    return n


def twisted_series(lam: NumericalPartition, model: StableModel, max_deg: int) -> LaurentWindow:
    """
    base * B_lambda: the stable cohomology with coefficients in S<lambda>(V_g)
    """
    return (base_series(model, max_deg) * bmodule.b_lambda_series(lam, max_deg)).restrict(max_deg)


def decorated_series(s: int, model: StableModel, max_deg: int, labeled: bool = True) -> LaurentWindow:
    """
    Stable cohomology with s marked points: base / (1 - q^2)^s when labeled,
    base * prod_(i <= s) (1 - q^(2i))^-1 when the points are unordered.
    """
    if s < 0:
        raise SizeLimitError("s", s, 0, settings.SET_PARTITION_CAP)
    orbits = [1] * s if labeled else list(range(1, s + 1))
    return (base_series(model, max_deg) * geometric_product(0, orbits, max_deg)).restrict(max_deg)


def curve_power_series(s: int, variant: VariantTag, model: StableModel, max_deg: int) -> LaurentWindow:
    """
    Stable cohomology of the s-fold fibre power of the universal curve (A),
    or its reduced quotient (A')
    """
    piece = diag_algebra.variant_hilbert_series(variant, s, max_deg)
    return (base_series(model, max_deg) * piece).restrict(max_deg)


def symmetric_product_series(s: int, model: StableModel, max_deg: int) -> LaurentWindow:
    """
    Stable cohomology of the unordered fibre power: base * (A_s)^(Sy_s)
    """
    piece = diag_algebra.invariant_series(VariantTag.A, s, max_deg)
    return (base_series(model, max_deg) * piece).restrict(max_deg)


def c_infty_series(
    variant: CVariant,
    max_deg: int,
    weight_cap: Optional[int] = None,
    factor_cutoff: Optional[int] = None,
) -> LaurentWindow:
    """
    Bigraded Hilbert series of C_infinity or C'_infinity.

    The first factor contributes sum_l w^l q^(2l) prod_(j <= l) (1 - q^(2j))^-1, the
    weight of a monomial being the largest index it uses (C' omits c_1). The tensor
    factor k contributes 1 + sum_l w^(kl) q^(2l(k - 1)) prod_(j <= l) (1 - q^(2j))^-1.

    Args:
        variant: C or C'
        max_deg: Last degree of the exact window
        weight_cap: Drop weights above this bound
        factor_cutoff: Last tensor factor k; factors with 2(k - 1) > max_deg are 1

    Returns:
        The series with terms keyed by (degree, point weight)
    """
    check_max_degree(max_deg)
    last_factor = max_deg // 2 + 1 if factor_cutoff is None else factor_cutoff
    top = max(max_deg, 0) // 2

    first_pieces = [LaurentWindow.one().with_weight(0, weight_cap)]
    for l in range(1, top + 1):
        if variant is CVariant.CPRIME and l == 1:
            continue
        generators = list(range(2 if variant is CVariant.CPRIME else 1, l + 1))
        if weight_cap is not None and l > weight_cap:
            break
        first_pieces.append(geometric_product(2 * l, generators, max_deg).with_weight(l, weight_cap))
    result = sum_series(first_pieces)

    for k in range(2, last_factor + 1):
        if 2 * (k - 1) > max_deg:
            continue
        pieces = [LaurentWindow.one().with_weight(0, weight_cap)]
        l = 1
        while 2 * l * (k - 1) <= max_deg and (weight_cap is None or k * l <= weight_cap):
            ring = geometric_product(2 * l * (k - 1), list(range(1, l + 1)), max_deg)
            pieces.append(ring.with_weight(k * l, weight_cap))
            l += 1
        result = result * sum_series(pieces)
    logger.debug(f"C series {variant.value} through degree {max_deg}, weight cap {weight_cap}")
    return result.restrict(max_deg)


def c_s_agreement(s: int, max_deg: int) -> AgreementReport:
    """
    Compare the weight <= s part of C_infinity with the invariants (A_s)^(Sy_s).

    Every degree of the window is verified; `conservative_max_deg` records the
    part of it (degree <= s) where the weight bound is automatic.
    """
    c_part = c_infty_series(CVariant.C, max_deg, weight_cap=s).collapse()
    invariants = diag_algebra.invariant_series(VariantTag.A, s, max_deg)
    failure = first_difference(c_part, invariants)
    passed = failure is None
    if passed:
        logger.info(f"C_infinity agrees with the invariants on {s} points through degree {max_deg}")
    else:
        logger.warning(f"C_infinity differs from the invariants on {s} points in degree {failure}")
    return AgreementReport(
        s=s,
        passed=passed,
        verified_max_deg=max_deg,
        conservative_max_deg=min(s, max_deg),
        first_failure=failure,
        c_coefficients=[list(pair) for pair in c_part.coefficients()],
        invariant_coefficients=[list(pair) for pair in invariants.coefficients()],
    )


def _one_column_series(m: int, max_deg: int) -> LaurentWindow:
    if m == 0:
        return LaurentWindow.one()
    if bmodule.lowest_degree(m) > max_deg:
        return LaurentWindow.from_coefficients({}, max_deg)
    return bmodule.extreme_closed_forms(NumericalPartition.model_construct(parts=(1,) * m), max_deg)


def exterior_coefficient_series(n: int, max_deg: int) -> LaurentWindow:
    """
    sum_(k >= 0) B_(1^(n - 2k)) with B of the empty partition equal to 1.

    Each B_(1^m) comes from its closed form; pieces starting past max_deg are skipped.
    """
    pieces = [_one_column_series(n - 2 * k, max_deg) for k in range(n // 2 + 1)]
    return sum_series(pieces).restrict(max_deg)


def total_degree_identity(s: int, model: StableModel, max_deg: int) -> AbelJacobiLevel:
    """
    Abel-Jacobi identity in total degree: base * C' against
    base * sum_(n <= s) q^n sum_k B_(1^(n - 2k)), compared through degree min(s, max_deg).
    """
    bound = min(s, max_deg)
    base = base_series(model, bound)
    lhs = base * c_infty_series(CVariant.CPRIME, bound, weight_cap=s).collapse()
    rhs = base * sum_series(
        exterior_coefficient_series(n, bound - n).shift(n) for n in range(0, bound + 1)
    ).restrict(bound)
    lhs, rhs = lhs.restrict(bound), rhs.restrict(bound)
    discrepancy = first_difference(lhs, rhs)
    return AbelJacobiLevel(
        s=s,
        passed=discrepancy is None,
        verified_max_deg=bound,
        first_discrepancy=discrepancy,
        lhs=[list(pair) for pair in lhs.coefficients()],
        rhs=[list(pair) for pair in rhs.coefficients()],
    )


def point_weight_identity(s: int, model: StableModel, max_deg: int) -> AbelJacobiLevel:
    """
    Naive matching: base * (weight-s part of C') * q^s against base * q^s * sum_k B_(1^(s - 2k))
    """
    base = base_series(model, max_deg)
    weight_part = c_infty_series(CVariant.CPRIME, max(max_deg - s, 0), weight_cap=s).weight_part(s)
    lhs = (base * weight_part.shift(s)).restrict(max_deg)
    rhs = (base * exterior_coefficient_series(s, max_deg - s).shift(s)).restrict(max_deg)
    discrepancy = first_difference(lhs, rhs)
    return AbelJacobiLevel(
        s=s,
        passed=discrepancy is None,
        verified_max_deg=min(lhs.max_deg, rhs.max_deg),
        first_discrepancy=discrepancy,
        lhs=[list(pair) for pair in lhs.coefficients()],
        rhs=[list(pair) for pair in rhs.coefficients()],
    )


def abel_jacobi_check(
    s_max: int,
    model: StableModel,
    max_deg: int,
    convention: AbelJacobiConvention = AbelJacobiConvention.TOTAL_DEGREE,
) -> AbelJacobiReport:
    """
    Check the Abel-Jacobi identity for s = 0..s_max under one grading convention.

    A failed check under the point-weight convention is reported with a diagnosis
    rather than raised.
    """
    if not 0 <= s_max <= settings.SET_PARTITION_CAP:
        raise SizeLimitError("s_max", s_max, 0, settings.SET_PARTITION_CAP)
    check_max_degree(max_deg)
    level_check = (
        total_degree_identity if convention is AbelJacobiConvention.TOTAL_DEGREE else point_weight_identity
    )
    levels: List[AbelJacobiLevel] = [level_check(s, model, max_deg) for s in range(s_max + 1)]
    passed = all(level.passed for level in levels)
    diagnosis = None
    if not passed:
        failing = next(level for level in levels if not level.passed)
        diagnosis = (
            f"convention-mismatch: {convention.value} pairing fails at s={failing.s}, "
            f"degree {failing.first_discrepancy}"
        )
        if convention is AbelJacobiConvention.POINT_WEIGHT and failing.s == 1:
            diagnosis += "; C' has no weight-1 part while the coefficients in wedge^1 V are nonzero"
        logger.warning(f"Abel-Jacobi check: {diagnosis}")
    else:
        logger.info(f"Abel-Jacobi check passed for s <= {s_max} under {convention.value}")
    return AbelJacobiReport(
        convention=convention,
        s_max=s_max,
        max_deg=max_deg,
        passed=passed,
        base_model=model.label,
        levels=levels,
        diagnosis=diagnosis,
    )


STABLE_KINDS = {
    "twisted": CutoffContext.TWISTED,
    "decorated": CutoffContext.DECORATED,
    "decorated-unlabeled": CutoffContext.DECORATED,
    "curve": CutoffContext.CURVE,
    "curve-reduced": CutoffContext.CURVE,
    "symmetric-product": CutoffContext.SYMMETRIC_PRODUCT,
}


def stable_response(
    kind: str,
    model: StableModel,
    max_deg: int,
    lam: Optional[NumericalPartition] = None,
    s: Optional[int] = None,
    g: Optional[int] = None,
    policy: NPolicy = NPolicy.IVANOV,
) -> StableSeriesResponse:
    """
    Payload of the stable command for one kind of stable series.

    Args:
        kind: One of STABLE_KINDS; "twisted" needs `lam`, the others need `s`
        model: Base model
        max_deg: Last degree of the exact window
        lam: Coefficient partition for twisted series
        s: Number of points for the point-based series
        g: Genus; when given the stable cutoff of `policy` is attached
        policy: Stable range policy

    Returns:
        The series with base-model provenance and optional cutoff
    """
    if kind not in STABLE_KINDS:
        raise IncompatibleSeriesError(f"unknown stable series kind '{kind}'", {"kind": kind})
    if kind == "twisted":
        if lam is None:
            raise UnsupportedPartitionError("twisted series need a partition", {"kind": kind})
        series = twisted_series(lam, model, max_deg)
        size = lam.size
    else:
        if s is None:
            raise SizeLimitError("s", -1, 0, settings.SET_PARTITION_CAP)
        size = s
        if kind == "decorated":
            series = decorated_series(s, model, max_deg, labeled=True)
        elif kind == "decorated-unlabeled":
            series = decorated_series(s, model, max_deg, labeled=False)
        elif kind == "curve":
            series = curve_power_series(s, VariantTag.A, model, max_deg)
        elif kind == "curve-reduced":
            series = curve_power_series(s, VariantTag.APRIME, model, max_deg)
        else:
            series = symmetric_product_series(s, model, max_deg)
    cutoff = None
    if g is not None:
        cutoff = stable_cutoff(policy, g, STABLE_KINDS[kind], size)
    return StableSeriesResponse(
        kind=kind,
        base_model=model.label,
        policy=policy if g is not None else None,
        g=g,
        stable_cutoff=cutoff,
        partition=lam.label() if lam is not None else None,
        s=s if kind != "twisted" else None,
        **Converter.series_fields(series),
    )


def c_series_response(variant: CVariant, max_deg: int, weight_cap: Optional[int] = None) -> CSeriesResponse:
    series = c_infty_series(variant, max_deg, weight_cap=weight_cap)
    fields = Converter.series_fields(series)
    return CSeriesResponse(variant=variant, weight_cap=weight_cap, **fields)
