"""
Run lifespan: logging setup and start/finish banners around one subcommand.
"""

import logging
import time
from contextlib import contextmanager
from typing import Iterator, Optional

from src.config.settings import settings
from src.schemas.config import RunConfig
from src.utils.logger import setup_logger

logger = logging.getLogger(__name__)


@contextmanager
def lifespan(command: str, config: RunConfig, log_level: Optional[str] = None) -> Iterator[None]:
    """
    Configure logging for the run and log its start and finish.

    Args:
        command: Subcommand name
        config: Resolved run configuration
        log_level: Overrides settings.LOG_LEVEL
    """
    level = log_level or ("DEBUG" if settings.DEBUG else settings.LOG_LEVEL)
    setup_logger(None, level)

    # ========== STARTUP ==========
    logger.info("=" * 60)
    logger.info(f"{settings.APP_NAME} {settings.VERSION}: {command} ({settings.ENVIRONMENT})")
    logger.info(f"tol={config.tol:g} workers={config.workers} seed={config.seed} format={config.format}")
    logger.info("=" * 60)
    started = time.perf_counter()

    try:
        yield
    except Exception as e:
        logger.error(f"{command} failed after {time.perf_counter() - started:.2f}s: {e}")
        raise

    # ========== SHUTDOWN ==========
    logger.info(f"{command} finished in {time.perf_counter() - started:.2f}s")


__all__ = ["lifespan"]
