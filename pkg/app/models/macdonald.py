from typing import List, Optional, Tuple

from pydantic import BaseModel


class ExtYAlgebraPiece(BaseModel):
    """
    Degree-n part of wedge(V_g)[y]: basis xi * y^j with xi a square-free exterior monomial
    """
    g: int
    s: int
    n: int
    basis: List[Tuple[Tuple[int, ...], int]]

    @property
    def dimension(self) -> int:
        return len(self.basis)


class BettiResponse(BaseModel):
    g: int
    s: int
    betti: List[int]
    total: int
    euler_characteristic: int
    poincare_duality: bool
    projective_bundle: Optional[bool] = None
