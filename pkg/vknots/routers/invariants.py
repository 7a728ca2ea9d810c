import logging

from fastapi import APIRouter, Path

from vknots.checks import run_checks
from vknots.gauss import format_gauss_code, parse_gauss_code
from vknots.schemas.invariants import (
    CodeRequest,
    InvariantsResponse,
    MutantResponse,
    VerifyResponse,
)
from vknots.summary import mutant_summary, summarize

router = APIRouter(prefix="/v1")
logger = logging.getLogger("vknots.api")


@router.post("/invariants", response_model=InvariantsResponse)
def invariants(body: CodeRequest) -> InvariantsResponse:
    d = parse_gauss_code(body.code)
    logger.debug("invariants for %d chords", d.n)
    return summarize(d)


@router.post("/verify", response_model=VerifyResponse)
def verify(body: CodeRequest) -> VerifyResponse:
    d = parse_gauss_code(body.code)
    result = run_checks(d)
    if not result.ok:
        logger.warning("verify failed for %s: %s", body.code, result.failures)
    return VerifyResponse(
        code=format_gauss_code(d),
        ok=result.ok,
        checks=result.checks,
        skipped=result.skipped,
    )


@router.get("/mutants/{k}", response_model=MutantResponse)
def mutants(k: int = Path(..., ge=1, le=64)) -> MutantResponse:
    return mutant_summary(k)
