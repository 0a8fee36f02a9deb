"""
Run configuration: Settings defaults, overlaid by a key=value file, overlaid by flags.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError as PydanticValidationError

from src.config.constants import CONFIG_FILE_KEYS
from src.config.settings import settings
from src.schemas.config import RunConfig
from src.utils.exceptions import ConfigError, ValidationError

logger = logging.getLogger(__name__)


def parse_config_text(text: str, path: Optional[str] = None) -> Dict[str, str]:
    """
    Parse key=value lines; blank lines and '#' comments are skipped.

    Raises:
        ConfigError: malformed line or unknown key, with its line number
    """
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key=value, got {raw.strip()!r}",
                              line=number, path=path)
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError("missing key", line=number, path=path)
        if key not in CONFIG_FILE_KEYS:
            raise ConfigError(
                f"unknown key {key!r} (allowed: {', '.join(CONFIG_FILE_KEYS)})",
                line=number, path=path,
            )
        values[key] = value
    return values


def load_config(
    path: Optional[str] = None,
    overrides: Optional[Dict[str, Any]] = None,
    params: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """
    Resolve the run configuration.

    Args:
        path: Optional key=value config file
        overrides: Values given as command-line flags (None entries ignored)
        params: Per-command parameters recorded in the snapshot

    Returns:
        RunConfig

    Raises:
        ConfigError: unreadable or malformed file
        ValidationError: a resolved value fails validation (e.g. workers=0)
    """
    data: Dict[str, Any] = dict(settings.run_defaults)

    if path is not None:
        config_path = Path(path)
        try:
            text = config_path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}", path=path)
        file_values = parse_config_text(text, path=path)
        logger.debug(f"Loaded {len(file_values)} keys from {path}")
        data.update(file_values)

    data.update({k: v for k, v in (overrides or {}).items() if v is not None})
    data["params"] = dict(params or {})

    try:
        return RunConfig(**data)
    except PydanticValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first.get("loc", ()))
        raise ValidationError(f"invalid {field}: {first.get('msg')}", field=field)


__all__ = ["load_config", "parse_config_text"]
