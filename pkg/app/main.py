from fastapi import FastAPI, Request
from contextlib import asynccontextmanager
from redis.exceptions import RedisError
from app.api import operators, checks
from app.core.config import settings
from app.core.rate_limit import limiter
from app.services.verification_queue import redis_conn, verification_queue
from slowapi import _rate_limit_exceeded_handler
from slowapi.errors import RateLimitExceeded
from slowapi.middleware import SlowAPIMiddleware
import logging

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info(f"Starting {settings.PROJECT_NAME} API...")
    yield
    logger.info(f"Shutting down {settings.PROJECT_NAME} API...")


app = FastAPI(
    title=f"{settings.PROJECT_NAME} API",
    lifespan=lifespan
)

# Undecorated routes fall back to API_RATE_LIMIT through the middleware
app.state.limiter = limiter
app.add_exception_handler(RateLimitExceeded, _rate_limit_exceeded_handler)
app.add_middleware(SlowAPIMiddleware)

app.include_router(operators.router)
app.include_router(checks.router)


@app.get("/")
@limiter.limit("60/minute")
def root(request: Request):
    return {"message": f"Welcome to {settings.PROJECT_NAME} API"}


@app.get("/health")
@limiter.limit("200/minute")  # Allow more for monitoring
def health_check(request: Request):
    """Health check with verification queue status."""
    try:
        redis_conn.ping()
        queue = {"reachable": True, "name": verification_queue.name, "queued_jobs": verification_queue.count}
    except RedisError as e:
        logger.warning(f"Verification queue unreachable: {e}")
        queue = {"reachable": False, "name": verification_queue.name, "queued_jobs": None}
    return {
        "status": "healthy" if queue["reachable"] else "degraded",
        "queue": queue,
    }
