from typing import Optional

from fastapi import APIRouter, HTTPException, Query

from app.core.config import settings
from app.models.bmodule import BSeriesResponse
from app.models.combinat import CycleType, NumericalPartition
from app.models.diag_algebra import InvariantSeriesResponse, VariantTag
from app.models.stable import CSeriesResponse, CVariant, NPolicy, StableModel, StableSeriesResponse
from app.services import bmodule, diag_algebra, stable

router = APIRouter()


def parse_partition(text: str, name: str = "lambda") -> NumericalPartition:
    try:
        return NumericalPartition.parse(text)
    except ValueError:
        raise HTTPException(status_code=422, detail=f"{name}='{text}' is not a valid partition")


def builtin_model(name: str) -> StableModel:
    if name == "default":
        return stable.default_model()
    if name == "unit":
        return stable.unit_model()
    raise HTTPException(status_code=422, detail=f"unknown base model '{name}'")


@router.get("/a", response_model=InvariantSeriesResponse)
def get_a_series(
    s: int,
    variant: VariantTag = VariantTag.A,
    max_deg: int = settings.DEFAULT_MAX_DEGREE,
    invariant: bool = False,
    trace: Optional[str] = None,
):
    """
    Hilbert series of a diagonal algebra variant, its invariants or one graded trace
    """
    mu = None
    if trace is not None:
        try:
            mu = CycleType.parse(trace)
        except ValueError:
            raise HTTPException(status_code=422, detail=f"trace='{trace}' is not a valid cycle type")
    return diag_algebra.series_response(variant, s, max_deg, invariant=invariant, trace=mu)


@router.get("/b", response_model=BSeriesResponse)
def get_b_series(
    partition: str = Query(..., alias="lambda"),
    max_deg: int = settings.DEFAULT_MAX_DEGREE,
    hodge: bool = False,
):
    """
    Hilbert series of B_lambda
    """
    return bmodule.series_response(parse_partition(partition), max_deg, hodge=hodge)


@router.get("/stable", response_model=StableSeriesResponse)
def get_stable_series(
    kind: str = "twisted",
    partition: Optional[str] = Query(None, alias="lambda"),
    s: Optional[int] = None,
    g: Optional[int] = None,
    policy: NPolicy = NPolicy.IVANOV,
    model: str = "default",
    max_deg: int = settings.DEFAULT_MAX_DEGREE,
):
    """
    Stable cohomology series of one kind, with the stable cutoff when a genus is given
    """
    lam = parse_partition(partition) if partition is not None else None
    return stable.stable_response(kind, builtin_model(model), max_deg, lam=lam, s=s, g=g, policy=policy)


@router.get("/c", response_model=CSeriesResponse)
def get_c_series(
    variant: CVariant = CVariant.C,
    max_deg: int = settings.DEFAULT_MAX_DEGREE,
    weight_cap: Optional[int] = None,
):
    """
    Bigraded Hilbert series of C_infinity or C'_infinity
    """
    return stable.c_series_response(variant, max_deg, weight_cap)
