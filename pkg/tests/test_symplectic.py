from math import comb

import pytest
from pydantic import ValidationError

from app.core.exceptions import StabilityRangeError
from app.models.combinat import NumericalPartition
from app.services import symplectic


@pytest.mark.parametrize(
    "parts, expected",
    [((4,), 330), ((3, 1), 594), ((2, 2), 308), ((2, 1, 1), 315), ((1, 1, 1, 1), 42)],
)
def test_dimensions_in_genus_four(parts, expected):
    assert symplectic.sp_irrep_dimension(4, NumericalPartition(parts=parts)) == expected


def test_small_dimensions():
    assert symplectic.sp_irrep_dimension(2, NumericalPartition.of(2, 1)) == 16
    assert symplectic.sp_irrep_dimension(1, NumericalPartition.of(1, 1)) == 0
    assert symplectic.sp_irrep_dimension(3, NumericalPartition.of(1)) == 6
    assert symplectic.sp_irrep_dimension(3, NumericalPartition(parts=())) == 1


def test_genus_must_be_positive():
    with pytest.raises(ValidationError):
        symplectic.sp_irrep_dimension(0, NumericalPartition.of(1))


def test_weyl_space_dimension():
    assert symplectic.weyl_space_dimension(4, 4) == 3715
    assert symplectic.naive_weyl_space_dimension(4, 4) == 3712
    assert symplectic.weyl_space_dimension(2, 2) == symplectic.naive_weyl_space_dimension(2, 2) == 15
    with pytest.raises(StabilityRangeError):
        symplectic.weyl_space_dimension(1, 2)


def test_schur_weyl_check_on_two_points():
    report = symplectic.schur_weyl_check(2, 2)
    assert report.passed
    assert report.total == 15
    assert [(row.partition, row.product) for row in report.rows] == [("2", 10), ("1,1", 5)]


@pytest.mark.parametrize("s", range(1, 7))
def test_schur_weyl_check_passes_in_range(s):
    for g in range(s, s + 4):
        report = symplectic.schur_weyl_check(g, s)
        assert report.passed, report.detail


def test_exterior_powers_decompose():
    for g in (1, 2, 3):
        for s in range(0, 2 * g + 1):
            pieces = symplectic.exterior_power_decomposition(g, s)
            assert sum(piece.dimension for piece in pieces) == comb(2 * g, s)
    assert [piece.partition for piece in symplectic.exterior_power_decomposition(3, 2)] == ["1,1", ""]
