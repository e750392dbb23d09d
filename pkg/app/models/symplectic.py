from typing import List, Optional

from pydantic import BaseModel, Field


class SymplecticContext(BaseModel):
    """
    The symplectic space V_g of dimension 2g
    """
    g: int = Field(ge=1)

    @property
    def dim(self) -> int:
        return 2 * self.g


class SchurWeylRow(BaseModel):
    partition: str
    symmetric_dimension: int
    symplectic_dimension: int
    product: int


class SchurWeylReport(BaseModel):
    """
    Dimension check of the decomposition of the Weyl space into S<lambda> x (lambda)
    """
    g: int
    s: int
    passed: bool
    weyl_space_dimension: int
    naive_dimension: int
    total: int
    rows: List[SchurWeylRow]
    detail: Optional[str] = None


class ExteriorPiece(BaseModel):
    partition: str
    dimension: int


class SpDimResponse(BaseModel):
    g: int
    partition: str
    dimension: int
