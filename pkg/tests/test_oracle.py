import random

import pytest

from app.core.config import pin_settings
from app.core.exceptions import ResourceLimitError, SizeLimitError
from app.models.combinat import NumericalPartition
from app.models.diag_algebra import VariantTag
from app.services import characters, combinat, oracle


def test_b_piece_in_degree_six():
    piece = oracle.build_piece(2, oracle.B_VARIANT, 6)
    assert piece.internal_degree == 8
    assert piece.twisted
    assert sorted(str(m) for m in piece.basis) == ["u_12^4", "u_1^2*u_2^2"]


def test_orbits_and_isotypic_dimensions():
    piece = oracle.build_piece(2, VariantTag.A, 2)
    assert piece.dimension == 3
    assert sorted(len(orbit) for orbit in oracle.orbits(piece)) == [1, 2]
    assert oracle.isotypic_dims_explicit(piece, NumericalPartition.of(2)) == 2
    assert oracle.isotypic_dims_explicit(piece, NumericalPartition.of(1, 1)) == 1


def test_explicit_traces():
    piece = oracle.build_piece(3, VariantTag.A, 4)
    assert oracle.explicit_trace(piece, (1, 2, 3)) == piece.dimension == 13
    swap = (2, 1, 3)
    images = oracle.apply(piece, swap)
    assert sum(1 for i, (target, _) in enumerate(images) if target == i) == oracle.explicit_trace(piece, swap)


def test_twisted_trace_carries_the_sign():
    piece = oracle.build_piece(3, oracle.B_VARIANT, 1)
    assert piece.dimension == 1
    assert oracle.explicit_trace(piece, (2, 1, 3)) == -1


@pytest.mark.parametrize("s", [1, 2, 3, 4, 5])
def test_cross_validation_passes(s):
    max_deg = 20 - s
    report = oracle.cross_validate(s, -s, max_deg)
    assert report.passed, report.first_failure
    assert report.checked_cells == (max_deg + s + 1) * 2 * len(combinat.partitions_of(s))


def test_caps():
    with pytest.raises(SizeLimitError):
        oracle.build_piece(8, VariantTag.A, 2)
    pin_settings(ORACLE_BASIS_CAP=1)
    with pytest.raises(ResourceLimitError):
        oracle.build_piece(2, VariantTag.A, 2)


def random_permutation(rng, s):
    sigma = list(range(1, s + 1))
    rng.shuffle(sigma)
    return tuple(sigma)


PIECES = [(3, oracle.B_VARIANT, 3), (3, VariantTag.A, 4), (4, oracle.B_VARIANT, 4), (4, VariantTag.APRIME, 6)]


@pytest.mark.parametrize("s, variant, n", PIECES)
def test_action_is_a_homomorphism(s, variant, n):
    piece = oracle.build_piece(s, variant, n)
    rng = random.Random(s * 100 + n)
    for _ in range(10):
        sigma, tau = random_permutation(rng, s), random_permutation(rng, s)
        rho_sigma, rho_tau = oracle.apply(piece, sigma), oracle.apply(piece, tau)
        composed = [
            (rho_sigma[target][0], sign * rho_sigma[target][1]) for target, sign in rho_tau
        ]
        assert composed == oracle.apply(piece, combinat.compose(sigma, tau))


@pytest.mark.parametrize("s, variant, n", PIECES)
def test_isotypic_dimensions_fill_the_piece(s, variant, n):
    piece = oracle.build_piece(s, variant, n)
    total = sum(
        characters.dimension(lam) * oracle.isotypic_dims_explicit(piece, lam) for lam in combinat.partitions_of(s)
    )
    assert total == piece.dimension


@pytest.mark.parametrize("s, variant, n", PIECES)
def test_explicit_trace_depends_only_on_cycle_type(s, variant, n):
    piece = oracle.build_piece(s, variant, n)
    rng = random.Random(n)
    for _ in range(12):
        sigma = random_permutation(rng, s)
        representative = combinat.representative(combinat.cycle_type_of(sigma))
        assert oracle.explicit_trace(piece, sigma) == oracle.explicit_trace(piece, representative)


@pytest.mark.parametrize("s, variant, n", PIECES)
def test_orbit_ranks_depend_only_on_the_signature(s, variant, n):
    piece = oracle.build_piece(s, variant, n)
    for orbit in oracle.orbits(piece):
        key = piece.basis[orbit[0]].key()
        for lam in combinat.partitions_of(s):
            direct = oracle._projector_rank(s, key, piece.twisted, lam.parts)
            cached = oracle._orbit_isotypic_rank(s, oracle._orbit_signature(key), piece.twisted, lam.parts)
            assert cached == direct
