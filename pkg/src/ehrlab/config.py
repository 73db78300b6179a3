"""
Runtime configuration for ehrlab.

Values come from the process environment, optionally seeded from a `.env`
file in the working directory.

Environment Variables:
    EHRLAB_FIXTURES   = directory holding fixture files (default: packaged fixtures)
    EHRLAB_JOBS       = default worker count for scans (default: 1)
    EHRLAB_LOG_LEVEL  = logging level name (default: WARNING)
    EHRLAB_TRACING    = off|console (default: off)
"""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

PACKAGE_FIXTURES = Path(__file__).resolve().parent / "fixtures"

_DEF_JOBS = 1
_DEF_LOG_LEVEL = "WARNING"
_DEF_TRACING = "off"
_TRACING_MODES = ("off", "console")


@dataclass(frozen=True)
class Settings:
    fixtures_dir: Path
    jobs: int
    log_level: str
    tracing: str


def _read_jobs() -> int:
    raw = os.getenv("EHRLAB_JOBS")
    if not raw:
        return _DEF_JOBS
    try:
        jobs = int(raw)
    except ValueError:
        logger.warning(f"EHRLAB_JOBS={raw!r} is not an integer; using {_DEF_JOBS}")
        return _DEF_JOBS
    if jobs < 1:
        logger.warning(f"EHRLAB_JOBS={jobs} must be positive; using {_DEF_JOBS}")
        return _DEF_JOBS
    return jobs


def _read_tracing() -> str:
    mode = os.getenv("EHRLAB_TRACING", _DEF_TRACING).lower()
    if mode not in _TRACING_MODES:
        logger.warning(f"Unknown EHRLAB_TRACING mode {mode!r}; tracing disabled")
        return _DEF_TRACING
    return mode


def get_settings() -> Settings:
    """Read settings from the environment (after loading `.env` from the working directory)."""
    env_path = Path.cwd() / ".env"
    if env_path.exists():
        logger.debug(f"Loading .env from: {env_path}")
        load_dotenv(dotenv_path=env_path)
    fixtures = os.getenv("EHRLAB_FIXTURES")
    return Settings(
        fixtures_dir=Path(fixtures) if fixtures else PACKAGE_FIXTURES,
        jobs=_read_jobs(),
        log_level=os.getenv("EHRLAB_LOG_LEVEL", _DEF_LOG_LEVEL).upper(),
        tracing=_read_tracing(),
    )
