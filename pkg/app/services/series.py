"""
Construction of truncated Hilbert series from geometric factors.
"""
import logging
from typing import Dict, Sequence

from app.core.config import settings
from app.core.exceptions import IncompatibleSeriesError, InvalidWindowError
from app.models.series import LaurentWindow

logger = logging.getLogger(__name__)


def check_max_degree(max_deg: int) -> int:
    if max_deg < settings.SERIES_DEGREE_FLOOR:
        raise InvalidWindowError(
            f"max degree {max_deg} is below the floor {settings.SERIES_DEGREE_FLOOR}",
            {"max_deg": max_deg},
        )
    return max_deg


def geometric_product(shift: int, orbit_lengths: Sequence[int], max_deg: int) -> LaurentWindow:
    """
    Expand q^shift * prod_l (1 - q^(2l))^-1 up to max_deg.

    Args:
        shift: Degree of the leading monomial
        orbit_lengths: Lengths l of the orbits, each contributing a degree-2l generator
        max_deg: Last degree of the exact window

    Returns:
        The truncated series; an exact monomial when there are no orbits
    """
    check_max_degree(max_deg)
    if any(length <= 0 for length in orbit_lengths):
        raise InvalidWindowError(f"orbit lengths must be positive, got {list(orbit_lengths)}")
    if not orbit_lengths:
        return LaurentWindow.monomial(shift)
    span = max_deg - shift
    if span < 0:
        return LaurentWindow({}, max_deg, max_deg)
    dense = [0] * (span + 1)
    dense[0] = 1
    for length in orbit_lengths:
        step = 2 * length
        for d in range(step, span + 1):
            dense[d] += dense[d - step]
    terms = {(shift + d, 0): c for d, c in enumerate(dense) if c}
    return LaurentWindow(terms, shift, max_deg)


def polynomial_ring_series(generators: int, max_deg: int) -> LaurentWindow:
    """
    Hilbert series of Q[c_1, ..., c_l] with c_i in degree 2i
    """
    return geometric_product(0, list(range(1, generators + 1)), max_deg)


def combine(a: LaurentWindow, b: LaurentWindow, op: str, k: int = 0) -> LaurentWindow:
    """
    Apply one of the ring operations: "add", "mul" or "shift" (of `a` by `k`).
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "shift":
        return a.shift(k)
    raise IncompatibleSeriesError(f"unknown series operation '{op}'")


def from_dense(values: Sequence[int], min_deg: int = 0, truncated: bool = True) -> LaurentWindow:
    """
    Series whose coefficients in degrees min_deg, min_deg + 1, ... are `values`
    """
    terms: Dict = {(min_deg + i, 0): c for i, c in enumerate(values)}
    return LaurentWindow(terms, min_deg, min_deg + len(values) - 1, truncated=truncated)
