import os
from dotenv import load_dotenv

load_dotenv()

class Settings:
    PROJECT_NAME: str = "Mullineux Lab"

    # Queue (rq over Redis) for long verification runs
    REDIS_URL: str = os.getenv("REDIS_URL", "redis://redis:6379/0")
    VERIFICATION_QUEUE: str = os.getenv("VERIFICATION_QUEUE", "verification")
    JOB_TIMEOUT: int = int(os.getenv("JOB_TIMEOUT", "1800"))  # seconds
    JOB_RESULT_TTL: int = int(os.getenv("JOB_RESULT_TTL", str(60 * 60 * 24)))  # 1 day

    # Verification defaults for queued jobs
    VERIFY_WORKERS: int = int(os.getenv("VERIFY_WORKERS", "1"))
    API_MAX_N: int = int(os.getenv("API_MAX_N", "14"))
    API_MAX_E: int = int(os.getenv("API_MAX_E", "12"))
    API_MAX_SIZE: int = int(os.getenv("API_MAX_SIZE", "400"))  # |λ| accepted by the operator endpoints

    # Rate limiting
    API_RATE_LIMIT: str = os.getenv("API_RATE_LIMIT", "100/minute")
    CHECK_RATE_LIMIT: str = os.getenv("CHECK_RATE_LIMIT", "10/minute")

settings = Settings()
