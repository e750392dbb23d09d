from typing import Optional

from fastapi import APIRouter

from app.api.routes.series import builtin_model
from app.core.config import settings
from app.models.macdonald import BettiResponse
from app.models.oracle import OracleReport
from app.models.stable import AbelJacobiConvention, AbelJacobiReport, AgreementReport
from app.models.symplectic import SchurWeylReport
from app.services import macdonald, oracle, stable, symplectic

router = APIRouter()


@router.get("/schur-weyl", response_model=SchurWeylReport)
def check_schur_weyl(g: int, s: int):
    return symplectic.schur_weyl_check(g, s)


@router.get("/c-agreement", response_model=AgreementReport)
def check_c_agreement(s: int, max_deg: int = settings.DEFAULT_MAX_DEGREE):
    """
    Weight <= s part of C_infinity against the invariants of A_s
    """
    return stable.c_s_agreement(s, max_deg)


@router.get("/abel-jacobi", response_model=AbelJacobiReport)
def check_abel_jacobi(
    s_max: int,
    max_deg: int = settings.DEFAULT_MAX_DEGREE,
    convention: AbelJacobiConvention = AbelJacobiConvention.TOTAL_DEGREE,
    model: str = "default",
):
    """
    Abel-Jacobi identity for s = 0..s_max; a failure comes back as a report, not an error
    """
    return stable.abel_jacobi_check(s_max, builtin_model(model), max_deg, convention)


@router.get("/macdonald", response_model=BettiResponse)
def check_macdonald(g: int, s: int):
    """
    Betti numbers of the s-th symmetric product of a genus-g curve
    """
    return macdonald.betti_report(g, s)


@router.get("/oracle", response_model=OracleReport)
def check_oracle(s: int, max_deg: int = settings.DEFAULT_MAX_DEGREE, min_deg: Optional[int] = None):
    """
    Explicit permutation-module construction against the character pipeline
    """
    return oracle.cross_validate(s, -s if min_deg is None else min_deg, max_deg)
