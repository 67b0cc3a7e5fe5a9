import logging
import os
import typing as t

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)

JOBS_ENV_VAR = "ICE20V_JOBS"


def init_dotenv():
    """
    Find `.env` file and load environment variables.
    """
    load_dotenv(find_dotenv(usecwd=True))


def getenv_jobs(default: t.Optional[int] = None) -> t.Optional[int]:
    """
    Read the worker thread count from `ICE20V_JOBS`, environment or `.env` file.

    The environment wins over the value given on the command line.
    """
    init_dotenv()
    raw = os.environ.get(JOBS_ENV_VAR)
    if raw is None or not raw.strip():
        return default
    try:
        jobs = int(raw)
    except ValueError as ex:
        raise ValueError(f"{JOBS_ENV_VAR} must be a positive integer, got {raw!r}") from ex
    if jobs < 1:
        raise ValueError(f"{JOBS_ENV_VAR} must be a positive integer, got {raw!r}")
    logger.debug(f"Using {jobs} worker threads from {JOBS_ENV_VAR}")
    return jobs
