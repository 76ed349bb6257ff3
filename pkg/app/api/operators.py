from fastapi import APIRouter, HTTPException, Request
from typing import Callable

from app.core.config import settings
from app.core.rate_limit import limiter
from app.partitions import (
    Partition,
    PartitionParseError,
    PreconditionError,
    RenderOptions,
    S_operator,
    conjugate,
    e_rim,
    hook_profile,
    mullineux,
    parse_partition,
    regularise,
    render_diagram,
    strip_I,
    strip_J,
)
from app.schemas.partition import (
    DiagramOut,
    HookTableOut,
    LPartitionOut,
    OperatorRequest,
    PartitionOut,
    RimOut,
)

router = APIRouter(prefix="/operators", tags=["operators"])


def _parse(data: OperatorRequest) -> Partition:
    try:
        return parse_partition(data.partition, max_size=settings.API_MAX_SIZE)
    except PartitionParseError as e:
        raise HTTPException(status_code=400, detail=str(e))


def _require_e(data: OperatorRequest) -> int:
    if data.e is None:
        raise HTTPException(status_code=400, detail="This operator needs a value of e")
    return data.e


def _apply(operator: Callable, data: OperatorRequest, needs_e: bool = True) -> PartitionOut:
    la = _parse(data)
    try:
        result = operator(la, _require_e(data)) if needs_e else operator(la)
    except PreconditionError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return PartitionOut.from_partition(result)


@router.post("/conjugate", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def conjugate_partition(request: Request, data: OperatorRequest):
    return _apply(conjugate, data, needs_e=False)


@router.post("/regularise", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def regularise_partition(request: Request, data: OperatorRequest):
    return _apply(regularise, data)


@router.post("/strip-i", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def strip_rim(request: Request, data: OperatorRequest):
    return _apply(strip_I, data)


@router.post("/strip-j", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def strip_truncated_rim(request: Request, data: OperatorRequest):
    return _apply(strip_J, data)


@router.post("/mullineux", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def mullineux_image(request: Request, data: OperatorRequest):
    return _apply(mullineux, data)


@router.post("/s-op", response_model=PartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def s_operator(request: Request, data: OperatorRequest):
    return _apply(S_operator, data)


@router.post("/rim", response_model=RimOut)
@limiter.limit(settings.API_RATE_LIMIT)
def rim_data(request: Request, data: OperatorRequest):
    la = _parse(data)
    try:
        return RimOut.from_rim(e_rim(la, _require_e(data)))
    except PreconditionError as e:
        raise HTTPException(status_code=400, detail=str(e))


@router.post("/hooks", response_model=HookTableOut)
@limiter.limit(settings.API_RATE_LIMIT)
def hook_table(request: Request, data: OperatorRequest):
    return HookTableOut.from_profile(hook_profile(_parse(data), _require_e(data)))


@router.post("/lpart", response_model=LPartitionOut)
@limiter.limit(settings.API_RATE_LIMIT)
def l_partition(request: Request, data: OperatorRequest):
    return LPartitionOut.from_profile(hook_profile(_parse(data), _require_e(data)))


@router.post("/show", response_model=DiagramOut)
@limiter.limit(settings.API_RATE_LIMIT)
def show_diagram(request: Request, data: OperatorRequest):
    la = _parse(data)
    try:
        options = RenderOptions(annotation=data.annotation, e=data.e)
        return DiagramOut(diagram=render_diagram(la, options))
    except PreconditionError as e:
        raise HTTPException(status_code=400, detail=str(e))
