"""
Runtime configuration for the ncsf toolkit.

Settings are read from the environment once, at import time, after
``load_dotenv`` has merged any ``.env`` file found in the working
directory.  The recognised variables are:

* ``NCSF_LOG_LEVEL`` – logging level name (default ``INFO``).
* ``NCSF_GOLDEN_DIR`` – directory written by ``matrix --golden``
  (default ``golden``).
* ``NCSF_MAX_CHECK_N`` – default ``--max-n`` of the ``check`` verb
  (default 7).
* ``NCSF_WORKERS`` – number of worker processes used by the sharded
  check drivers (default 1, i.e. run in-process).
* ``NCSF_API_HOST`` / ``NCSF_API_PORT`` – bind address of the HTTP
  API started by ``serve`` (default ``0.0.0.0:8001``).
"""

from __future__ import annotations

import logging
import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _get_int_env(name: str, default: int) -> int:
    """Read an integer setting, falling back to ``default`` when unset."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise EnvironmentError(f"{name} must be an integer, got {raw!r}")


LOG_LEVEL: str = os.getenv("NCSF_LOG_LEVEL", "INFO").upper()
GOLDEN_DIR: str = os.getenv("NCSF_GOLDEN_DIR", "golden")
MAX_CHECK_N: int = _get_int_env("NCSF_MAX_CHECK_N", 7)
WORKERS: int = max(1, _get_int_env("NCSF_WORKERS", 1))
API_HOST: str = os.getenv("NCSF_API_HOST", "0.0.0.0")
API_PORT: int = _get_int_env("NCSF_API_PORT", 8001)


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging for command-line and server entry points."""
    name = (level or LOG_LEVEL).upper()
    numeric = getattr(logging, name, None)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {name}")
    logging.basicConfig(level=numeric, format=LOG_FORMAT)
    logger.debug(f"Logging configured at {name}")
