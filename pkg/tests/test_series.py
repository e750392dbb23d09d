import random

import pytest

from app.core.exceptions import (
    IncompatibleSeriesError,
    InvalidWindowError,
    TruncationError,
    WindowUnderflowError,
)
from app.models.series import LaurentWindow, first_difference, sum_series
from app.services.series import combine, from_dense, geometric_product, polynomial_ring_series


def test_geometric_product_expansion():
    assert geometric_product(0, [1], 6).dense(0, 6) == [1, 0, 1, 0, 1, 0, 1]
    assert geometric_product(3, [1, 2], 11).coefficients() == [(3, 1), (5, 1), (7, 2), (9, 2), (11, 3)]


def test_geometric_product_without_orbits_is_exact():
    series = geometric_product(4, [], 2)
    assert not series.truncated
    assert series.coefficients() == [(4, 1)]


def test_polynomial_ring_series_counts_partitions():
    # Q[c_1, c_2, c_3] in degree 2n counts partitions of n into parts <= 3
    assert polynomial_ring_series(3, 12).dense(0, 12)[::2] == [1, 1, 2, 3, 4, 5, 7]


def test_multiplying_by_inverse_factor():
    ring = geometric_product(0, [1], 6)
    factor = LaurentWindow.from_coefficients({0: 1, 2: -1}, 2, truncated=False)
    assert ring * factor == LaurentWindow.one().restrict(6)


def test_divide():
    quotient = LaurentWindow.one().restrict(10).divide(geometric_product(0, [1], 10), 10)
    assert quotient.coefficients() == [(0, 1), (2, -1)]
    with pytest.raises(IncompatibleSeriesError):
        LaurentWindow.one().divide(LaurentWindow.monomial(0, 2), 4)


def test_coefficient_beyond_window():
    series = geometric_product(0, [1], 4)
    assert series[4] == 1
    with pytest.raises(TruncationError):
        series.coefficient(5)
    assert LaurentWindow.monomial(2).coefficient(100) == 0


def test_window_errors():
    with pytest.raises(InvalidWindowError):
        LaurentWindow({}, 3, 2)
    with pytest.raises(InvalidWindowError):
        LaurentWindow({(-1, 0): 1}, 0, 4)
    with pytest.raises(WindowUnderflowError):
        LaurentWindow.one().shift(-5000)


def test_addition_keeps_the_smaller_window():
    total = geometric_product(0, [1], 4) + geometric_product(0, [2], 6)
    assert total.max_deg == 4
    assert total.dense(0, 4) == [2, 0, 1, 0, 2]


def test_graded_and_bigraded_do_not_mix():
    with pytest.raises(IncompatibleSeriesError):
        LaurentWindow.one().with_weight(1) + geometric_product(0, [1], 4)


def test_weight_parts():
    series = LaurentWindow.one().with_weight(0) + geometric_product(2, [1], 6).with_weight(1)
    assert series.weight_part(1).coefficients() == [(2, 1), (4, 1), (6, 1)]
    assert series.collapse().coefficients() == [(0, 1), (2, 1), (4, 1), (6, 1)]
    capped = series.restrict(6) * geometric_product(0, [1], 6).with_weight(1, weight_cap=1)
    assert capped.weight_cap == 1
    with pytest.raises(TruncationError):
        capped.coefficient(2, weight=2)


def test_first_difference():
    a = from_dense([1, 0, 1, 0, 2])
    b = from_dense([1, 0, 1, 0, 3])
    assert first_difference(a, a) is None
    assert first_difference(a, b) == 4


def test_ring_axioms_on_random_series():
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = (
            from_dense([rng.randint(-5, 5) for _ in range(8)], min_deg=rng.randint(-3, 3))
            for _ in range(3)
        )
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert first_difference(a * (b + c), a * b + a * c) is None
        assert sum_series([a, b]) == combine(a, b, "add")
        assert combine(a, b, "shift", 2) == a.shift(2)
