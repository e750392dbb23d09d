from math import comb

import pytest

from app.core.exceptions import SizeLimitError
from app.services import macdonald


def generating_function_betti(g, s):
    # coefficient of x^n t^s in (1 + x)^(2g) / ((1 - t)(1 - x^2 t))
    betti = [0] * (2 * s + 1)
    for a in range(0, min(2 * g, s) + 1):
        for c in range(0, s - a + 1):
            betti[a + 2 * c] += comb(2 * g, a)
    return betti


def test_genus_one():
    assert macdonald.sym_product_betti(1, 1) == [1, 2, 1]
    assert macdonald.sym_product_betti(1, 2) == [1, 2, 2, 2, 1]


def test_genus_two_second_symmetric_product():
    assert macdonald.sym_product_betti(2, 2) == [1, 4, 7, 4, 1]


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("s", range(1, 6))
def test_matches_generating_function(g, s):
    betti = macdonald.sym_product_betti(g, s)
    assert betti == generating_function_betti(g, s)
    assert betti == betti[::-1]


def test_report():
    report = macdonald.betti_report(1, 2)
    assert report.total == 8
    assert report.euler_characteristic == 0
    assert report.poincare_duality
    assert report.projective_bundle is True
    assert macdonald.betti_report(2, 2).projective_bundle is None


def test_graded_piece_dimension():
    assert macdonald.graded_piece(2, 2, 2).dimension == comb(4, 2) + 1


def test_range_is_capped():
    with pytest.raises(SizeLimitError):
        macdonald.sym_product_betti(5, 2)
    with pytest.raises(SizeLimitError):
        macdonald.sym_product_betti(1, 0)
