"""
Queued verification runs.

POST /checks enqueues a suite on the rq queue; GET /checks/{job_id} reports
the job status and, once finished, the verification reports.
"""

from fastapi import APIRouter, HTTPException, Request
from rq.exceptions import NoSuchJobError
from rq.job import Job
import logging

from app.core.config import settings
from app.core.rate_limit import limiter
from app.schemas.partition import CheckJobOut, CheckRequest
from app.services.verification_queue import redis_conn, verification_queue
from app.services.verification_service import SUITES
from app.services.verification_worker import run_check_job

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/checks", tags=["checks"])


@router.post("/", response_model=CheckJobOut, status_code=202)
@limiter.limit(settings.CHECK_RATE_LIMIT)
def enqueue_check(request: Request, data: CheckRequest):
    """
    Enqueue a verification suite.
    max_n above API_MAX_N and e above API_MAX_E fail validation; run those
    from the command line.
    """
    if data.suite not in SUITES:
        raise HTTPException(status_code=400, detail=f"Unknown suite '{data.suite}'. Allowed: {list(SUITES)}")
    if data.e_min > data.e_max:
        raise HTTPException(status_code=400, detail="e_min must not exceed e_max")

    job = verification_queue.enqueue(
        run_check_job,
        data.suite,
        data.max_n,
        list(range(data.e_min, data.e_max + 1)),
        job_timeout=settings.JOB_TIMEOUT,
        result_ttl=settings.JOB_RESULT_TTL,
    )
    logger.info(f"Enqueued verification job {job.id}: suite={data.suite} max_n={data.max_n}")
    return CheckJobOut(job_id=job.id, status=job.get_status())


@router.get("/{job_id}", response_model=CheckJobOut)
def get_check(job_id: str):
    try:
        job = Job.fetch(job_id, connection=redis_conn)
    except NoSuchJobError:
        raise HTTPException(status_code=404, detail="Verification job not found")

    status = job.get_status()
    out = CheckJobOut(job_id=job.id, status=status)
    if job.is_finished:
        out.reports = job.result
    elif job.is_failed:
        out.error = (job.exc_info or "job failed").strip().splitlines()[-1]
    return out
