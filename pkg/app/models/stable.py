from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from app.models.series import LaurentWindow


class Provenance(str, Enum):
    FREE_POLYNOMIAL = "free-polynomial"
    USER_SUPPLIED = "user-supplied"


class NPolicy(str, Enum):
    """
    Lower bounds N(g) for the stable range
    """
    IVANOV = "ivanov"
    HARER85 = "harer85"
    HARER93_UPPER = "harer93-upper"

    def bound(self, g: int) -> int:
        if self is NPolicy.IVANOV:
            return g // 2 - 1
        if self is NPolicy.HARER85:
            return g // 3
        return (2 * g) // 3


class CutoffContext(str, Enum):
    TWISTED = "twisted"
    CURVE = "curve"
    DECORATED = "decorated"
    SYMMETRIC_PRODUCT = "symmetric-product"
    ABEL_JACOBI = "abel-jacobi"


class CVariant(str, Enum):
    C = "c"
    CPRIME = "cprime"


class AbelJacobiConvention(str, Enum):
    TOTAL_DEGREE = "total-degree"
    POINT_WEIGHT = "point-weight"


class StableModel(BaseModel):
    """
    Hilbert series of the stable cohomology of the mapping class group.

    Without an explicit `base` the free polynomial model with one generator in
    each even degree is used; that model is an assumption, not a computed fact.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    provenance: Provenance = Provenance.FREE_POLYNOMIAL
    base: Optional[LaurentWindow] = None

    @property
    def label(self) -> str:
        if self.provenance is Provenance.FREE_POLYNOMIAL:
            return "free-polynomial (external assumption)"
        return "user-supplied"


class StableSeriesResponse(BaseModel):
    """
    A stable series with its provenance and, when a genus is given, its stable cutoff
    """
    kind: str
    min_deg: int
    max_deg: int
    coefficients: List[List[int]]
    base_model: str
    policy: Optional[NPolicy] = None
    g: Optional[int] = None
    stable_cutoff: Optional[int] = None
    partition: Optional[str] = None
    s: Optional[int] = None
    hodge: Optional[List[List[int]]] = None


class CSeriesResponse(BaseModel):
    variant: CVariant
    min_deg: int
    max_deg: int
    weight_cap: Optional[int] = None
    coefficients: List[List[int]]
    weights: List[List[int]]


class AgreementReport(BaseModel):
    """
    Weight <= s part of C_infinity against the Sy_s-invariants of A_s
    """
    s: int
    passed: bool
    verified_max_deg: int
    conservative_max_deg: int
    first_failure: Optional[int] = None
    c_coefficients: List[List[int]]
    invariant_coefficients: List[List[int]]


class AbelJacobiLevel(BaseModel):
    s: int
    passed: bool
    verified_max_deg: int
    first_discrepancy: Optional[int] = None
    lhs: List[List[int]]
    rhs: List[List[int]]


class AbelJacobiReport(BaseModel):
    convention: AbelJacobiConvention
    s_max: int
    max_deg: int
    passed: bool
    base_model: str
    levels: List[AbelJacobiLevel]
    diagnosis: Optional[str] = None
