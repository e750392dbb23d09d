from fractions import Fraction
from math import factorial

import pytest

from app.core.exceptions import ConsistencyError, PartitionSizeMismatchError, SizeLimitError
from app.models.characters import ClassFunction
from app.models.combinat import CycleType, NumericalPartition
from app.services import characters, combinat


def test_character_table_of_sy3():
    table = characters.character_table(3)
    assert table.partitions == ["3", "2,1", "1,1,1"]
    assert table.classes == ["3", "2,1", "1,1,1"]
    assert table.class_sizes == [2, 3, 1]
    assert table.rows == [[1, 1, 1], [-1, 0, 2], [1, -1, 1]]
    assert table.dimensions == [1, 2, 1]


@pytest.mark.parametrize("s", range(1, 11))
def test_sum_of_squared_dimensions(s):
    assert sum(characters.dimension(lam) ** 2 for lam in combinat.partitions_of(s)) == factorial(s)


@pytest.mark.parametrize("s", range(1, 11))
def test_row_and_column_orthogonality(s):
    table = characters.character_table(s)
    order = factorial(s)
    for i, row_i in enumerate(table.rows):
        for j, row_j in enumerate(table.rows):
            inner = sum(size * a * b for size, a, b in zip(table.class_sizes, row_i, row_j))
            assert inner == (order if i == j else 0)
    for c, mu in enumerate(combinat.cycle_types_of(s)):
        z, _, _ = combinat.class_data(mu)
        for d in range(len(table.classes)):
            column = sum(row[c] * row[d] for row in table.rows)
            assert column == (z if c == d else 0)


def test_identity_column_is_the_dimension():
    for lam in combinat.partitions_of(6):
        identity = CycleType(parts=(1,) * 6)
        assert characters.irreducible_character(lam, identity) == characters.dimension(lam)


def test_hook_lengths():
    assert characters.dimension(NumericalPartition.of(3, 2)) == 5
    assert characters.dimension(NumericalPartition.of(3, 1, 1)) == 6
    assert characters.dimension(NumericalPartition.of(4, 2, 1)) == 35


def test_sign_character():
    for mu in combinat.cycle_types_of(5):
        _, _, sign = combinat.class_data(mu)
        assert characters.irreducible_character(NumericalPartition.of(1, 1, 1, 1, 1), mu) == sign


def test_multiplicity_of_trivial_in_constant_function():
    f = ClassFunction(4, {mu.parts: 1 for mu in combinat.cycle_types_of(4)})
    assert characters.multiplicity(f, NumericalPartition.of(4)) == 1
    assert characters.multiplicity(f, NumericalPartition.of(3, 1)) == 0


def test_non_integral_multiplicity_is_a_consistency_error():
    f = ClassFunction(2, {(2,): 1})
    assert characters.multiplicity(f, NumericalPartition.of(2)) == Fraction(1, 2)
    with pytest.raises(ConsistencyError):
        characters.integral_multiplicity(f, NumericalPartition.of(2))


def test_size_mismatch():
    with pytest.raises(PartitionSizeMismatchError):
        characters.irreducible_character(NumericalPartition.of(2, 1), CycleType.of(2))
    with pytest.raises(SizeLimitError):
        characters.character_table(0)


def test_character_function_matches_table_rows():
    table = characters.character_table(4)
    for lam, row in zip(combinat.partitions_of(4), table.rows):
        f = characters.character_function(lam)
        assert [f(mu) for mu in combinat.cycle_types_of(4)] == row
