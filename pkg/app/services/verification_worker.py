# app/services/verification_worker.py
import logging
from typing import List, Sequence

from app.core.config import settings
from app.services.verification_service import reports_to_json, run_suite

logger = logging.getLogger(__name__)


def run_check_job(suite: str, max_n: int, e_values: Sequence[int], workers: int = 0) -> List[dict]:
    """
    Worker entrypoint: runs a verification suite and returns the report list.

    Args:
        suite: One of main, boxthm, lemmas, identities, census, all
        max_n: Largest partition size to enumerate
        e_values: Values of e to check
        workers: Process pool size; 0 takes VERIFY_WORKERS from settings

    Returns:
        Reports as JSON-ready dicts (rq keeps them as the job result)
    """
    workers = workers or settings.VERIFY_WORKERS
    logger.info(f"Verification job started: suite={suite} max_n={max_n} e={list(e_values)} workers={workers}")
    try:
        reports = run_suite(suite, max_n, e_values, workers)
    except Exception as e:
        logger.error(f"Verification job failed: {e}")
        raise
    failed = [report.check_id for report in reports if not report.passed]
    if failed:
        logger.warning(f"Verification job finished with failing checks: {failed}")
    else:
        logger.info(f"Verification job finished: {len(reports)} reports, all passed")
    return reports_to_json(reports)
