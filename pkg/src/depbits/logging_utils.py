from __future__ import annotations

import logging
import os
import sys

LOG_LEVEL_ENV = "DEPBITS_LOG_LEVEL"


def _level_from_env() -> int:
    raw = os.environ.get(LOG_LEVEL_ENV, "").strip()
    if not raw:
        return logging.INFO
    if raw.isdigit():
        return int(raw)
    level = logging.getLevelName(raw.upper())
    return level if isinstance(level, int) else logging.INFO


def setup_logging(level: int | None = None) -> logging.Logger:
    """Configure and return the application logger.

    *level* wins over ``$DEPBITS_LOG_LEVEL``; INFO when neither is set.
    Everything goes to stderr; stdout carries data only.
    """
    logger = logging.getLogger("depbits")
    if level is None:
        level = _level_from_env()
    logger.setLevel(level)
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    fmt = logging.Formatter(
        "[%(asctime)s] %(levelname)-7s %(name)s — %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    handler.setFormatter(fmt)
    logger.addHandler(handler)
    return logger
