import random

import pytest

from app.core.exceptions import (
    IncompatibleSeriesError,
    InvalidBaseModelError,
    SizeLimitError,
    StabilityRangeError,
)
from app.models.combinat import NumericalPartition
from app.models.diag_algebra import VariantTag
from app.models.series import sum_series
from app.models.stable import AbelJacobiConvention, CutoffContext, CVariant, NPolicy
from app.services import bmodule, combinat, stable


def test_default_base_series():
    model = stable.default_model()
    assert stable.base_series(model, 8).dense(0, 8) == [1, 0, 1, 0, 2, 0, 3, 0, 5]
    assert model.label == "free-polynomial (external assumption)"


def test_user_model_validation():
    model = stable.user_model({0: 1, 2: 1}, 4)
    assert model.label == "user-supplied"
    with pytest.raises(InvalidBaseModelError):
        stable.user_model({0: 1, 1: 1}, 4)
    with pytest.raises(InvalidBaseModelError):
        stable.user_model({0: 2}, 4)
    with pytest.raises(InvalidBaseModelError):
        stable.user_model({0: 1, 2: -1}, 4)


def test_truncated_user_model_limits_the_window():
    model = stable.user_model({0: 1, 2: 1}, 4)
    assert stable.decorated_series(1, model, 10).max_deg == 4


def test_stable_ranges():
    assert stable.stable_range(NPolicy.IVANOV, 10) == 4
    assert stable.stable_range(NPolicy.HARER85, 10) == 3
    assert stable.stable_range(NPolicy.HARER93_UPPER, 10) == 6
    with pytest.raises(StabilityRangeError):
        stable.stable_range(NPolicy.IVANOV, 1)


def test_stable_cutoffs():
    assert stable.stable_cutoff(NPolicy.IVANOV, 10, CutoffContext.TWISTED, 2) == 2
    assert stable.stable_cutoff(NPolicy.IVANOV, 10, CutoffContext.CURVE, 5) == 4
    assert stable.stable_cutoff(NPolicy.IVANOV, 10, CutoffContext.SYMMETRIC_PRODUCT, 1) == 2
    assert stable.stable_cutoff(NPolicy.IVANOV, 10, CutoffContext.ABEL_JACOBI, 3) == 3


def test_twisted_series_with_unit_base_is_b():
    lam = NumericalPartition.of(1, 1)
    twisted = stable.twisted_series(lam, stable.unit_model(), 10)
    assert twisted.coefficients() == bmodule.b_lambda_series(lam, 10).coefficients()


def test_decorated_series():
    model = stable.default_model()
    assert stable.decorated_series(1, model, 4).dense(0, 4) == [1, 0, 2, 0, 4]
    assert stable.decorated_series(2, model, 4, labeled=False).dense(0, 4) == [1, 0, 2, 0, 5]
    with pytest.raises(SizeLimitError):
        stable.decorated_series(-1, model, 4)


def test_curve_and_symmetric_product_series():
    unit = stable.unit_model()
    assert stable.curve_power_series(1, VariantTag.A, unit, 6).dense(0, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert stable.symmetric_product_series(2, unit, 4).dense(0, 4) == [1, 0, 2, 0, 3]


def test_c_infinity_low_degrees():
    assert stable.c_infty_series(CVariant.C, 4).coefficients() == [(0, 1), (2, 2), (4, 6)]
    assert stable.c_infty_series(CVariant.CPRIME, 6).dense(0, 6) == [1, 0, 1, 0, 4, 0, 8]


def test_c_infinity_weights():
    series = stable.c_infty_series(CVariant.C, 4, weight_cap=2)
    assert series.coefficient(2, weight=1) == 1
    assert series.coefficient(2, weight=2) == 1
    prime = stable.c_infty_series(CVariant.CPRIME, 8)
    assert prime.weight_part(1).is_zero


@pytest.mark.parametrize("s", range(1, 7))
def test_c_agreement(s):
    report = stable.c_s_agreement(s, 16)
    assert report.passed
    assert report.first_failure is None
    assert report.conservative_max_deg == s


def test_exterior_coefficient_series():
    series = stable.exterior_coefficient_series(3, 5)
    assert series.coefficients() == [(1, 1), (3, 2), (5, 3)]


@pytest.mark.parametrize("n", range(0, 6))
def test_exterior_coefficients_match_the_character_route(n):
    pieces = [
        bmodule.b_lambda_series(NumericalPartition(parts=(1,) * (n - 2 * k)), 12) for k in range(n // 2 + 1)
    ]
    expected = sum_series(pieces).restrict(12)
    assert stable.exterior_coefficient_series(n, 12).coefficients() == expected.coefficients()


def test_exterior_coefficients_skip_pieces_past_the_window():
    series = stable.exterior_coefficient_series(12, 3)
    assert series.max_deg == 3
    assert series.coefficient(0) == 1


def test_abel_jacobi_total_degree_passes():
    report = stable.abel_jacobi_check(3, stable.default_model(), 8)
    assert report.passed
    assert report.diagnosis is None
    assert [level.s for level in report.levels] == [0, 1, 2, 3]


def test_abel_jacobi_total_degree_on_twelve_points():
    report = stable.abel_jacobi_check(12, stable.unit_model(), 12)
    assert report.passed, report.diagnosis
    assert len(report.levels) == 13
    assert report.levels[-1].verified_max_deg == 12


def test_abel_jacobi_point_weight_reports_mismatch():
    report = stable.abel_jacobi_check(2, stable.default_model(), 8, AbelJacobiConvention.POINT_WEIGHT)
    assert not report.passed
    assert report.diagnosis.startswith("convention-mismatch")
    assert "s=1" in report.diagnosis
    assert report.levels[0].passed


def test_stable_response():
    response = stable.stable_response(
        "twisted", stable.default_model(), 10, lam=NumericalPartition.of(1, 1), g=12, policy=NPolicy.IVANOV
    )
    assert response.stable_cutoff == 3
    assert response.partition == "1,1"
    assert response.s is None
    assert response.base_model == "free-polynomial (external assumption)"
    curve = stable.stable_response("curve", stable.default_model(), 6, s=2)
    assert curve.stable_cutoff is None and curve.policy is None


def test_stable_response_rejects_bad_requests():
    with pytest.raises(IncompatibleSeriesError):
        stable.stable_response("moduli", stable.default_model(), 6, s=1)
    with pytest.raises(SizeLimitError):
        stable.stable_response("curve", stable.default_model(), 6)


def test_c_series_response():
    response = stable.c_series_response(CVariant.C, 4, weight_cap=2)
    assert response.weights[0] == [0, 0, 1]
    assert [2, 1, 1] in response.weights
    assert [2, 2, 1] in response.weights


@pytest.mark.parametrize("variant", list(CVariant))
@pytest.mark.parametrize("max_deg", [6, 11, 14])
def test_extra_tensor_factors_change_nothing(variant, max_deg):
    default = stable.c_infty_series(variant, max_deg, weight_cap=8)
    for extra in (1, 4):
        raised = stable.c_infty_series(variant, max_deg, weight_cap=8, factor_cutoff=max_deg // 2 + 1 + extra)
        assert raised.terms() == default.terms()


@pytest.mark.parametrize("seed", range(4))
def test_twisted_series_are_nonnegative_with_parity_support(seed):
    rng = random.Random(seed)
    lam = rng.choice(combinat.partitions_of(rng.randint(1, 4)))
    series = stable.twisted_series(lam, stable.default_model(), rng.randint(6, 14))
    for n, value in series.coefficients():
        assert value > 0
        assert (n - lam.size) % 2 == 0
