"""
Logging Setup - Disintegrator

Installs plain or JSON log formatting on stderr for the CLI.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from .config import get_config


def configure_logging(level: Optional[str] = None, json: Optional[bool] = None) -> logging.Handler:
    """
    Configure the root logger.

    Args:
        level: Log level name (defaults to config.log_level)
        json: Emit JSON records via python-json-logger (defaults to config.log_json)

    Returns:
        logging.Handler: The installed stderr handler
    """
    config = get_config()
    level = level or config.log_level
    json = config.log_json if json is None else json

    handler = logging.StreamHandler(sys.stderr)
    if json:
        handler.setFormatter(jsonlogger.JsonFormatter(config.log_format))
    else:
        handler.setFormatter(logging.Formatter(config.log_format))

    root = logging.getLogger()
    for existing in list(root.handlers):
        root.removeHandler(existing)
    root.addHandler(handler)
    root.setLevel(level.upper())
    return handler
