"""Configuration settings and logging setup"""

import logging
import os
from typing import Optional

import yaml
from pydantic import BaseModel, Field, ValidationError

# Files
SETTINGS_FILE = os.environ.get("NMV_SETTINGS_FILE", "workbench.yaml")

# Logging
LOG_LEVEL = os.environ.get("NMV_LOG_LEVEL", "INFO").upper()

# Search settings
SEARCH_MAX_SIZE = int(os.environ.get("NMV_SEARCH_MAX_SIZE", "6"))
SEARCH_WORKERS = int(os.environ.get("NMV_SEARCH_WORKERS", "1"))
PROGRESS_EVERY = int(os.environ.get("NMV_PROGRESS_EVERY", "0"))
MIN_SIZE = 2
HARD_MAX_SIZE = 8

# Configure logging
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)


def get_logger(name: str) -> logging.Logger:
    """Get a logger with the given name"""
    return logging.getLogger(name)


logger = get_logger(__name__)


class SearchSettings(BaseModel):
    """Enumeration defaults, overridable from the settings file"""
    max_size: int = Field(SEARCH_MAX_SIZE, ge=MIN_SIZE, le=HARD_MAX_SIZE)
    workers: int = Field(SEARCH_WORKERS, ge=1)
    progress_every: int = Field(PROGRESS_EVERY, ge=0)


def load_settings(path: Optional[str] = None) -> SearchSettings:
    """Load search settings from the YAML settings file

    Missing or malformed files fall back to the environment defaults.
    """
    path = path or SETTINGS_FILE

    if not os.path.exists(path):
        logger.debug(f"No settings file found at {path}, using defaults")
        return SearchSettings()

    try:
        with open(path, 'r') as f:
            data = yaml.safe_load(f) or {}
    except (yaml.YAMLError, IOError) as e:
        logger.error(f"Failed to read settings file: {e}")
        return SearchSettings()

    try:
        settings = SearchSettings(**(data.get("search") or {}))
    except (ValidationError, AttributeError, TypeError) as e:
        logger.error(f"Invalid settings in {path}: {e}")
        return SearchSettings()

    logger.info(f"Loaded search settings from {path}")
    return settings
