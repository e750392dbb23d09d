from typing import Dict, Iterable, List, Optional, Tuple

from app.core.config import settings
from app.core.exceptions import (
    IncompatibleSeriesError,
    InvalidWindowError,
    TruncationError,
    WindowUnderflowError,
)

Term = Tuple[int, int]


class LaurentWindow:
    """
    Integer Laurent series in q, exact on the degree window [min_deg, max_deg].

    Coefficients below `min_deg` are zero. Beyond `max_deg` they are unknown when
    `truncated` is set and zero otherwise (the series is then a Laurent polynomial).
    Terms are keyed by (degree, weight); single-graded series use weight 0 throughout.
    A bigraded series with a `weight_cap` only stores weights up to the cap.
    """

    __slots__ = ("_terms", "min_deg", "max_deg", "truncated", "bigraded", "weight_cap")

    def __init__(
        self,
        terms: Dict[Term, int],
        min_deg: int,
        max_deg: int,
        truncated: bool = True,
        bigraded: bool = False,
        weight_cap: Optional[int] = None,
    ):
        if min_deg > max_deg:
            raise InvalidWindowError(
                f"empty degree window [{min_deg}, {max_deg}]",
                {"min_deg": min_deg, "max_deg": max_deg},
            )
        if min_deg < settings.SERIES_DEGREE_FLOOR:
            raise WindowUnderflowError(
                f"degree {min_deg} is below the floor {settings.SERIES_DEGREE_FLOOR}",
                {"min_deg": min_deg, "floor": settings.SERIES_DEGREE_FLOOR},
            )
        kept = {
            (d, w): c
            for (d, w), c in terms.items()
            if c and (not truncated or d <= max_deg) and (weight_cap is None or w <= weight_cap)
        }
        if not bigraded and any(w for _, w in kept):
            raise IncompatibleSeriesError("single-graded series carries a nonzero weight")
        if kept:
            lowest = min(d for d, _ in kept)
            if lowest < min_deg:
                raise InvalidWindowError(
                    f"term in degree {lowest} lies below min_deg {min_deg}",
                    {"min_deg": min_deg, "degree": lowest},
                )
            # tighten to the actual support
            min_deg = lowest
            if not truncated:
                max_deg = max(max_deg, max(d for d, _ in kept))
        else:
            min_deg = max_deg
        self._terms = kept
        self.min_deg = min_deg
        self.max_deg = max_deg
        self.truncated = truncated
        self.bigraded = bigraded
        self.weight_cap = weight_cap

    # constructors

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1, weight: int = 0) -> "LaurentWindow":
        return cls({(degree, weight): coefficient}, degree, degree, truncated=False, bigraded=weight != 0)

    @classmethod
    def one(cls) -> "LaurentWindow":
        return cls.monomial(0)

    @classmethod
    def zero(cls) -> "LaurentWindow":
        return cls({}, 0, 0, truncated=False)

    @classmethod
    def from_coefficients(
        cls, coefficients: Dict[int, int], max_deg: int, truncated: bool = True
    ) -> "LaurentWindow":
        terms = {(d, 0): c for d, c in coefficients.items()}
        low = min(coefficients) if coefficients else max_deg
        return cls(terms, min(low, max_deg), max_deg, truncated=truncated)

    # access

    def coefficient(self, degree: int, weight: Optional[int] = None) -> int:
        """
        Coefficient in one degree, summed over weights unless a weight is given
        """
        if degree > self.max_deg and self.truncated:
            raise TruncationError(
                f"degree {degree} lies beyond the exact window ending at {self.max_deg}",
                {"degree": degree, "max_deg": self.max_deg},
            )
        if weight is not None:
            if self.weight_cap is not None and weight > self.weight_cap:
                raise TruncationError(
                    f"weight {weight} exceeds the weight cap {self.weight_cap}",
                    {"weight": weight, "weight_cap": self.weight_cap},
                )
            return self._terms.get((degree, weight), 0)
        return sum(c for (d, _), c in self._terms.items() if d == degree)

    def __getitem__(self, degree: int) -> int:
        return self.coefficient(degree)

    def coefficients(self) -> List[Tuple[int, int]]:
        """
        Nonzero (degree, coefficient) pairs in ascending degree, weights summed
        """
        collapsed: Dict[int, int] = {}
        for (d, _), c in self._terms.items():
            collapsed[d] = collapsed.get(d, 0) + c
        return [(d, c) for d, c in sorted(collapsed.items()) if c]

    def terms(self) -> List[Tuple[int, int, int]]:
        return [(d, w, c) for (d, w), c in sorted(self._terms.items())]

    def dense(self, low: Optional[int] = None, high: Optional[int] = None) -> List[int]:
        low = self.min_deg if low is None else low
        high = self.max_deg if high is None else high
        return [self.coefficient(d) for d in range(low, high + 1)]

    @property
    def is_zero(self) -> bool:
        return not self._terms

    # grading

    def weight_part(self, weight: int) -> "LaurentWindow":
        if not self.bigraded and weight:
            return LaurentWindow({}, self.max_deg, self.max_deg, truncated=self.truncated)
        if self.weight_cap is not None and weight > self.weight_cap:
            raise TruncationError(
                f"weight {weight} exceeds the weight cap {self.weight_cap}",
                {"weight": weight, "weight_cap": self.weight_cap},
            )
        terms = {(d, 0): c for (d, w), c in self._terms.items() if w == weight}
        return LaurentWindow(terms, self.min_deg, self.max_deg, truncated=self.truncated)

    def collapse(self) -> "LaurentWindow":
        """
        Forget the weight grading; with a weight cap this is the weight <= cap part
        """
        terms: Dict[Term, int] = {}
        for (d, _), c in self._terms.items():
            terms[(d, 0)] = terms.get((d, 0), 0) + c
        return LaurentWindow(terms, self.min_deg, self.max_deg, truncated=self.truncated)

    def with_weight(self, weight: int, weight_cap: Optional[int] = None) -> "LaurentWindow":
        """
        Lift a single-graded series to a bigraded one concentrated in one weight
        """
        if self.bigraded:
            raise IncompatibleSeriesError("series is already bigraded")
        terms = {(d, weight): c for (d, _), c in self._terms.items()}
        return LaurentWindow(
            terms, self.min_deg, self.max_deg, self.truncated, bigraded=True, weight_cap=weight_cap
        )

    # arithmetic

    def restrict(self, max_deg: int) -> "LaurentWindow":
        """
        Cut the exact window at max_deg
        """
        bound = min(max_deg, self.max_deg) if self.truncated else max_deg
        return LaurentWindow(
            dict(self._terms), min(self.min_deg, bound), bound, True, self.bigraded, self.weight_cap
        )

    def shift(self, k: int) -> "LaurentWindow":
        if self.min_deg + k < settings.SERIES_DEGREE_FLOOR:
            raise WindowUnderflowError(
                f"shifting by {k} moves degree {self.min_deg} below {settings.SERIES_DEGREE_FLOOR}",
                {"shift": k, "min_deg": self.min_deg, "floor": settings.SERIES_DEGREE_FLOOR},
            )
        terms = {(d + k, w): c for (d, w), c in self._terms.items()}
        return LaurentWindow(
            terms, self.min_deg + k, self.max_deg + k, self.truncated, self.bigraded, self.weight_cap
        )

    def scale(self, factor: int) -> "LaurentWindow":
        terms = {key: c * factor for key, c in self._terms.items()}
        return LaurentWindow(
            terms, self.min_deg, self.max_deg, self.truncated, self.bigraded, self.weight_cap
        )

    def __neg__(self) -> "LaurentWindow":
        return self.scale(-1)

    def _joint_cap(self, other: "LaurentWindow") -> Optional[int]:
        caps = [c for c in (self.weight_cap, other.weight_cap) if c is not None]
        return min(caps) if caps else None

    def __add__(self, other: "LaurentWindow") -> "LaurentWindow":
        if self.bigraded != other.bigraded and not (self.is_zero or other.is_zero):
            raise IncompatibleSeriesError("cannot add a bigraded series to a single-graded one")
        bounds = [s.max_deg for s in (self, other) if s.truncated]
        truncated = bool(bounds)
        max_deg = min(bounds) if truncated else max(self.max_deg, other.max_deg)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            terms[key] = terms.get(key, 0) + c
        min_deg = min(self.min_deg, other.min_deg, max_deg)
        return LaurentWindow(
            terms, min_deg, max_deg, truncated, self.bigraded or other.bigraded, self._joint_cap(other)
        )

    def __sub__(self, other: "LaurentWindow") -> "LaurentWindow":
        return self + (-other)

    def __mul__(self, other: "LaurentWindow") -> "LaurentWindow":
        bounds = []
        if self.truncated:
            bounds.append(self.max_deg + other.min_deg)
        if other.truncated:
            bounds.append(other.max_deg + self.min_deg)
        truncated = bool(bounds)
        max_deg = min(bounds) if truncated else self.max_deg + other.max_deg
        cap = self._joint_cap(other)
        terms: Dict[Term, int] = {}
        for (d1, w1), c1 in self._terms.items():
            if truncated and d1 + other.min_deg > max_deg:
                continue
            for (d2, w2), c2 in other._terms.items():
                d, w = d1 + d2, w1 + w2
                if (truncated and d > max_deg) or (cap is not None and w > cap):
                    continue
                terms[(d, w)] = terms.get((d, w), 0) + c1 * c2
        min_deg = min(self.min_deg + other.min_deg, max_deg)
        return LaurentWindow(
            terms, min_deg, max_deg, truncated, self.bigraded or other.bigraded, cap
        )

    def divide(self, other: "LaurentWindow", max_deg: int) -> "LaurentWindow":
        """
        Exact quotient self / other, expanded up to max_deg.

        The lowest coefficient of `other` must be +1 or -1.
        """
        if self.bigraded or other.bigraded:
            raise IncompatibleSeriesError("division is only defined for single-graded series")
        if other.is_zero:
            raise IncompatibleSeriesError("division by the zero series")
        low = other.min_deg
        lead = other.coefficient(low)
        if lead not in (1, -1):
            raise IncompatibleSeriesError(f"leading coefficient {lead} is not a unit")
        start = self.min_deg - low
        bound = max_deg
        if self.truncated:
            bound = min(bound, self.max_deg - low)
        if other.truncated:
            bound = min(bound, other.max_deg - low + start)
        quotient: Dict[int, int] = {}
        for d in range(start, bound + 1):
            value = self.coefficient(d + low)
            for j in range(1, d - start + 1):
                if other.truncated and low + j > other.max_deg:
                    break
                value -= other.coefficient(low + j) * quotient.get(d - j, 0)
            quotient[d] = value * lead
        terms = {(d, 0): c for d, c in quotient.items()}
        return LaurentWindow(terms, min(start, bound), bound, truncated=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentWindow):
            return NotImplemented
        return (
            self._terms == other._terms
            and self.max_deg == other.max_deg
            and self.truncated == other.truncated
        )

    def __repr__(self) -> str:
        body = " + ".join(f"{c}q^{d}" + (f"w^{w}" if w else "") for d, w, c in self.terms()) or "0"
        tail = f" + O(q^{self.max_deg + 1})" if self.truncated else ""
        return f"LaurentWindow({body}{tail})"


def first_difference(a: LaurentWindow, b: LaurentWindow) -> Optional[int]:
    """
    Lowest degree on the common exact window where two series differ, or None
    """
    bounds = [s.max_deg for s in (a, b) if s.truncated]
    high = min(bounds) if bounds else max(a.max_deg, b.max_deg)
    low = min(a.min_deg, b.min_deg)
    for degree in range(low, high + 1):
        left = {w: c for (d, w), c in a._terms.items() if d == degree}
        right = {w: c for (d, w), c in b._terms.items() if d == degree}
        if left != right:
            return degree
    return None


def sum_series(items: Iterable[LaurentWindow]) -> LaurentWindow:
    total = LaurentWindow.zero()
    for item in items:
        total = total + item
    return total
