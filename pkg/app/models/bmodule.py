from typing import List, Optional

from pydantic import BaseModel, ConfigDict


class BSeriesResponse(BaseModel):
    """
    Hilbert series of B_lambda, optionally with the Hodge type (d, d) of each nonzero degree
    """
    partition: str
    min_deg: int
    max_deg: int
    coefficients: List[List[int]]
    hodge: Optional[List[List[int]]] = None

    model_config = ConfigDict(from_attributes=True)
