import pytest

from app.core.config import pin_settings
from app.core.exceptions import PartitionSizeMismatchError
from app.models.combinat import CycleType, SetPartition
from app.models.diag_algebra import AlgebraElement, VariantTag
from app.services import combinat, diag_algebra


def test_variant_minimal_exponents():
    assert [VariantTag.ATILDE.minimal_exponent(k) for k in (1, 2, 3)] == [0, 1, 1]
    assert [VariantTag.A.minimal_exponent(k) for k in (1, 2, 3)] == [0, 1, 2]
    assert [VariantTag.APRIME.minimal_exponent(k) for k in (1, 2, 3)] == [2, 1, 2]
    assert [VariantTag.ADOUBLEPRIME.minimal_exponent(k) for k in (1, 2, 3)] == [2, 2, 2]


def test_hilbert_series_on_two_points():
    series = diag_algebra.variant_hilbert_series(VariantTag.A, 2, 6)
    assert series.dense(0, 6) == [1, 0, 3, 0, 4, 0, 5]


def test_reduced_variants_start_late():
    assert diag_algebra.variant_hilbert_series(VariantTag.APRIME, 2, 10).min_deg == 2
    assert diag_algebra.variant_hilbert_series(VariantTag.ADOUBLEPRIME, 2, 10).min_deg == 4


def test_product_collapses_onto_the_join():
    s = 3
    product = diag_algebra.multiply(diag_algebra.u(s, 1), diag_algebra.u_block(s, (1, 2)))
    assert product == diag_algebra.power(diag_algebra.u_block(s, (1, 2)), 2)
    assert product.degree == 4
    assert diag_algebra.multiply(diag_algebra.u_block(s, (1, 2)), diag_algebra.u_block(s, (2, 3))).partition.blocks == (
        (1, 2, 3),
    )


def test_unit_and_a_generators():
    s = 4
    unit = diag_algebra.unit(s)
    assert diag_algebra.multiply(unit, diag_algebra.u(s, 3)) == diag_algebra.u(s, 3)
    assert diag_algebra.a_block(s, (2,)) == unit
    p = SetPartition.from_blocks(s, [(1, 3), (2, 4)])
    a_p = diag_algebra.a_partition(p)
    assert a_p == diag_algebra.multiply(diag_algebra.a_block(s, (1, 3)), diag_algebra.a_block(s, (2, 4)))
    assert diag_algebra.variant_member(a_p, VariantTag.A)
    assert not diag_algebra.variant_member(a_p, VariantTag.ADOUBLEPRIME)


def test_algebra_elements():
    s = 2
    x = AlgebraElement.of(diag_algebra.u(s, 1)) - AlgebraElement.of(diag_algebra.u(s, 2))
    a12 = AlgebraElement.of(diag_algebra.a_block(s, (1, 2)))
    assert diag_algebra.multiply_elements(x, a12).is_zero
    square = diag_algebra.multiply_elements(x, x)
    assert list(square.homogeneous_parts()) == [4]


@pytest.mark.parametrize("s", [2, 3, 4])
def test_presentation_relations_hold(s):
    assert diag_algebra.relation_defects(s) == []


def test_monomial_basis_size():
    assert len(diag_algebra.monomial_basis(VariantTag.A, 3, 4)) == 13
    assert diag_algebra.monomial_basis(VariantTag.A, 3, 3) == []
    for degree in range(0, 11, 2):
        expected = diag_algebra.variant_hilbert_series(VariantTag.APRIME, 3, 10).coefficient(degree)
        assert len(diag_algebra.monomial_basis(VariantTag.APRIME, 3, degree)) == expected


def test_identity_trace_is_the_hilbert_series():
    identity = CycleType.of(1, 1, 1)
    for variant in VariantTag:
        trace = diag_algebra.graded_trace(identity, variant, 3, 10)
        assert trace.coefficients() == diag_algebra.variant_hilbert_series(variant, 3, 10).coefficients()


def test_trace_size_mismatch():
    with pytest.raises(PartitionSizeMismatchError):
        diag_algebra.graded_trace(CycleType.of(2), VariantTag.A, 3, 4)


def test_invariants_on_two_points():
    assert diag_algebra.invariant_series(VariantTag.A, 2, 4).dense(0, 4) == [1, 0, 2, 0, 3]
    assert diag_algebra.invariant_series(VariantTag.ADOUBLEPRIME, 2, 8).coefficients() == [(4, 1), (6, 1), (8, 2)]


@pytest.mark.parametrize("variant", list(VariantTag))
@pytest.mark.parametrize("s", range(1, 9))
def test_invariants_by_class_average_match_partition_types(variant, s):
    by_classes = diag_algebra.invariant_series(variant, s, 24)
    by_types = diag_algebra.invariant_series_by_type(variant, s, 24)
    assert by_classes.coefficients() == by_types.coefficients()


def test_threaded_traces_match_serial():
    serial = diag_algebra.invariant_series(VariantTag.APRIME, 4, 12)
    pin_settings(MAX_WORKERS=3)
    threaded = diag_algebra.invariant_series(VariantTag.APRIME, 4, 12)
    assert threaded == serial


def test_minimal_degree_by_type():
    assert diag_algebra.minimal_degree_by_type(VariantTag.ADOUBLEPRIME, combinat.partitions_of(3)[0]) == 4


def test_series_response_kinds():
    trace = diag_algebra.series_response(VariantTag.A, 2, 4, trace=CycleType.of(2))
    assert trace.kind == "trace"
    assert trace.trace == "2"
    assert trace.coefficients == [[0, 1], [2, 1], [4, 2]]
    invariant = diag_algebra.series_response(VariantTag.A, 2, 4, invariant=True)
    assert invariant.kind == "invariant"
    assert invariant.coefficients == [[0, 1], [2, 2], [4, 3]]
