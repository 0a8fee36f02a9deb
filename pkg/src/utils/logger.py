"""
Logging configuration with JSON and text format support.
"""

import logging
import sys
from typing import Any, Optional
from pathlib import Path

try:
    from pythonjsonlogger.json import JsonFormatter
except ImportError:  # python-json-logger < 3.1
    from pythonjsonlogger.jsonlogger import JsonFormatter

from src.config.settings import settings


JSON_LOG_FIELDS = "%(asctime)s %(levelname)s %(name)s %(module)s %(funcName)s %(lineno)d %(message)s"


class JSONFormatter(JsonFormatter):
    """Structured JSON formatter; context passed through log_with_context lands under 'extra'"""

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)
        if "extra_data" in log_record:
            log_record["extra"] = log_record.pop("extra_data")
        log_record["level"] = record.levelname
        log_record.pop("levelname", None)


class ColoredFormatter(logging.Formatter):
    """Colored formatter for console output"""

    COLORS = {
        "DEBUG": "\033[36m",      # Cyan
        "INFO": "\033[32m",       # Green
        "WARNING": "\033[33m",    # Yellow
        "ERROR": "\033[31m",      # Red
        "CRITICAL": "\033[35m",   # Magenta
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        """Format log record with colors and trailing context"""
        color = self.COLORS.get(record.levelname, self.RESET)
        record = logging.makeLogRecord(record.__dict__)
        record.levelname = f"{color}{record.levelname}{self.RESET}"
        text = super().format(record)
        context = getattr(record, "extra_data", None)
        if context:
            text += " | " + " ".join(f"{key}={value}" for key, value in context.items())
        return text


def _build_formatter(log_format: str, for_file: bool = False) -> logging.Formatter:
    if log_format == "json":
        return JSONFormatter(JSON_LOG_FIELDS)
    if for_file:
        return logging.Formatter(
            "%(asctime)s | %(levelname)-8s | %(name)s | %(module)s:%(funcName)s:%(lineno)d | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
    return ColoredFormatter(
        "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    )


def setup_logger(
    name: Optional[str] = None,
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    log_format: Optional[str] = None,
) -> logging.Logger:
    """
    Setup logger with configured handlers.

    Console output goes to stderr; stdout is reserved for reports.

    Args:
        name: Logger name (default: root)
        level: Log level (default: from settings)
        log_file: Log file path (default: from settings, none when unset)
        log_format: "json" or "text" (default: from settings)

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)

    log_level = level or settings.LOG_LEVEL
    logger.setLevel(getattr(logging, log_level.upper()))

    logger.handlers.clear()
    if name:
        logger.propagate = False

    fmt = (log_format or settings.LOG_FORMAT).lower()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG)
    console_handler.setFormatter(_build_formatter(fmt))
    logger.addHandler(console_handler)

    log_file_path = log_file or settings.LOG_FILE
    if log_file_path:
        log_path = Path(log_file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(log_file_path)
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(_build_formatter(fmt, for_file=True))
        logger.addHandler(file_handler)

    return logger


def log_with_context(
    logger: logging.Logger,
    level: str,
    message: str,
    **context: Any
):
    """
    Log message with additional context.

    Args:
        logger: Logger instance
        level: Log level (debug, info, warning, error, critical)
        message: Log message
        **context: Additional context data
    """
    log_func = getattr(logger, level.lower())
    extra = {"extra_data": context}
    log_func(message, extra=extra)


__all__ = [
    "setup_logger",
    "log_with_context",
    "JSONFormatter",
    "ColoredFormatter",
]
