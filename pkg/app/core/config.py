import os
from dotenv import load_dotenv

load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).strip().lower() in ("1", "true", "yes", "on")


class Config:
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # Grid evaluation
    GRID_WORKERS = int(os.getenv("GRID_WORKERS", "1"))
    REPORT_TIMINGS = _flag("REPORT_TIMINGS", "false")

    # q-calculus
    GAUSS_CROSSCHECK_LIMIT = int(os.getenv("GAUSS_CROSSCHECK_LIMIT", "128"))
    MEMO_ENABLED = _flag("MEMO_ENABLED", "true")

    # Redis (optional shared memo table)
    REDIS_URL = os.getenv("REDIS_URL", "")
    CACHE_TTL = int(os.getenv("CACHE_TTL", "86400"))

    # Telescope suite
    RANDOM_SEQUENCE_SEED = int(os.getenv("RANDOM_SEQUENCE_SEED", "20240601"))
    RANDOM_SEQUENCE_CASES = int(os.getenv("RANDOM_SEQUENCE_CASES", "20"))
    # above this S(n) the telescopes are compared after multiplying by 1 - q
    TELESCOPE_DENSE_LIMIT = int(os.getenv("TELESCOPE_DENSE_LIMIT", "20000"))

    # Project metadata
    PROJECT_NAME = os.getenv("PROJECT_NAME", "qcubes")
    PROJECT_VERSION = os.getenv("PROJECT_VERSION", "1.0.0")
