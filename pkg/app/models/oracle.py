from typing import List, Optional, Tuple

from pydantic import BaseModel

from app.models.diag_algebra import PartitionMonomial


class ExplicitGradedPiece(BaseModel):
    """
    One graded piece as an explicit vector space with a signed permutation action.

    `generator_actions[k - 1][b]` is (target, sign): the transposition (k, k+1) sends
    basis vector b to sign * basis vector target.
    """
    s: int
    variant: str
    n: int
    internal_degree: int
    twisted: bool
    basis: List[PartitionMonomial]
    generator_actions: List[List[Tuple[int, int]]]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class OracleCell(BaseModel):
    degree: int
    dimension: int
    multiplicities: List[List[str]]


class OracleReport(BaseModel):
    """
    Explicit construction against the character pipeline
    """
    s: int
    min_deg: int
    max_deg: int
    passed: bool
    checked_cells: int
    first_failure: Optional[str] = None
    cells: List[OracleCell]
