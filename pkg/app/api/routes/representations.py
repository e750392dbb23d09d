from typing import List

from fastapi import APIRouter, Query

from app.api.routes.series import parse_partition
from app.models.characters import CharacterTableResponse
from app.models.symplectic import ExteriorPiece, SpDimResponse
from app.services import characters, symplectic

router = APIRouter()


@router.get("/character-table/{s}", response_model=CharacterTableResponse)
def get_character_table(s: int):
    """
    Character table of the symmetric group Sy_s
    """
    return characters.character_table(s)


@router.get("/sp-dim", response_model=SpDimResponse)
def get_sp_dimension(g: int, partition: str = Query(..., alias="lambda")):
    """
    Dimension of the irreducible Sp(2g)-module S<lambda>(V_g)
    """
    lam = parse_partition(partition)
    return SpDimResponse(g=g, partition=lam.label(), dimension=symplectic.sp_irrep_dimension(g, lam))


@router.get("/exterior-power", response_model=List[ExteriorPiece])
def get_exterior_power(g: int, s: int):
    """
    Decomposition of wedge^s V_g into the modules S<1^(s - 2k)>
    """
    return symplectic.exterior_power_decomposition(g, s)
