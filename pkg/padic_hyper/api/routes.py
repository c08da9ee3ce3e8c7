"""
FastAPI routes for p-adic computations and identity verification.
"""

from __future__ import annotations

import logging
from typing import Any, Callable, Literal, Optional

from fastapi import APIRouter, Depends, HTTPException, Request
from fastapi.concurrency import run_in_threadpool
from pydantic import BaseModel, Field

from padic_hyper.errors import PadicHyperError, UnknownIdentity
from padic_hyper.qseries import FormName
from padic_hyper.verifier import REGISTRY, VerifyOptions, get_identity, run_all

logger = logging.getLogger(__name__)

router = APIRouter()
verify_router = APIRouter(tags=["verify"])


def get_app_state(request: Request):
    return request.app.state


async def _compute(func: Callable[..., Any], *args: Any) -> Any:
    try:
        return await run_in_threadpool(func, *args)
    except UnknownIdentity as exc:
        raise HTTPException(status_code=404, detail=str(exc))
    except (PadicHyperError, ValueError) as exc:
        logger.info(f"rejected request: {type(exc).__name__}: {exc}")
        raise HTTPException(status_code=400, detail=f"{type(exc).__name__}: {exc}")


class PrimeRequest(BaseModel):
    p: int = Field(..., ge=3, description="Odd prime.")
    prec: int = Field(..., ge=1, description="Precision exponent K.")


class GammaRequest(PrimeRequest):
    arg: str = Field(..., description="Rational argument, e.g. '1/4'.")


class TeichRequest(PrimeRequest):
    x: int
    pow: int = 1


class NgnRequest(PrimeRequest):
    a: list[str] = Field(..., min_length=1)
    b: list[str] = Field(..., min_length=1)
    s: int = 1


class JacobiRequest(PrimeRequest):
    j1: int
    j2: int
    via: Literal["gamma", "sum"] = "sum"


class FseriesRequest(PrimeRequest):
    upper: list[str] = Field(..., min_length=1)
    lower: list[str] = Field(..., min_length=1)
    z: str = "1"
    trunc: str = "p-1"


class VerifyRequest(BaseModel):
    id: str = Field(..., description="Registry id, or 'all'.")
    p_min: int = Field(3, ge=2)
    p_max: int = Field(13, ge=2)
    prec: int = Field(3, ge=1)
    d1: Optional[int] = Field(None, ge=2)
    d2: Optional[int] = Field(None, ge=2)


@router.post("/gamma")
async def gamma(payload: GammaRequest, state=Depends(get_app_state)):
    value = await _compute(state.service.gamma, payload.p, payload.prec, payload.arg)
    return {"value": str(value)}


@router.post("/teich")
async def teich(payload: TeichRequest, state=Depends(get_app_state)):
    value = await _compute(state.service.teich, payload.p, payload.prec, payload.x, payload.pow)
    return {"value": value}


@router.post("/ngn")
async def ngn(payload: NgnRequest, state=Depends(get_app_state)):
    value = await _compute(state.service.ngn, payload.p, payload.prec, payload.a, payload.b, payload.s)
    return {"value": str(value)}


@router.post("/jacobi")
async def jacobi(payload: JacobiRequest, state=Depends(get_app_state)):
    value = await _compute(state.service.jacobi, payload.p, payload.prec, payload.j1, payload.j2, payload.via)
    return {"value": str(value)}


@router.post("/fseries")
async def fseries(payload: FseriesRequest, state=Depends(get_app_state)):
    value = await _compute(
        state.service.fseries, payload.p, payload.prec, payload.upper, payload.lower, payload.z, payload.trunc
    )
    return {"value": value}


@router.get("/coef/{form}/{n}")
async def coef(form: FormName, n: int, state=Depends(get_app_state)):
    if n < 0:
        raise HTTPException(status_code=400, detail="n must be non-negative")
    value = await _compute(state.service.coef, form, n)
    return {"form": form, "n": n, "value": value}


@verify_router.get("/identities")
async def list_identities():
    return {
        "identities": [
            {"id": id, "claim": case.claim, "filter": case.filter_text, "free_variables": case.free_variables}
            for id, case in REGISTRY.items()
        ]
    }


@verify_router.post("/verify")
async def verify_identities(payload: VerifyRequest, state=Depends(get_app_state)):
    if (payload.d1 is None) != (payload.d2 is None):
        raise HTTPException(status_code=400, detail="d1 and d2 must be given together")
    if payload.id != "all":
        try:
            get_identity(payload.id)
        except UnknownIdentity as exc:
            raise HTTPException(status_code=404, detail=str(exc))
    options = VerifyOptions.from_settings(
        state.settings,
        d_pairs=((payload.d1, payload.d2),) if payload.d1 is not None else None,
    )
    ids = None if payload.id == "all" else [payload.id]
    result = await _compute(lambda: run_all(payload.p_min, payload.p_max, payload.prec, options=options, ids=ids))
    return {
        "records": [report.model_dump() for report in result.reports],
        "summary": result.summary.to_dict(),
        "failures": result.summary.failures,
    }
