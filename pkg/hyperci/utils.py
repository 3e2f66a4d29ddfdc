import copy
import logging
import os
import sys
import yaml

from typing import Any

from hyperci.config import LoggingConfig

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

# ANSI colours per level
LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[1;31m",
}
RESET = "\033[0m"


def load_config(path: str) -> dict:
    """
    Load configuration from a YAML file.

    Args:
        path (str): Path to the YAML configuration file.

    Returns:
        dict: Configuration dictionary (empty for an empty file).

    Raises:
        ValueError: The file is not valid YAML or does not hold a mapping.
    """
    with open(path, "r", encoding="utf-8") as file:
        try:
            config = yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise ValueError(f"{path}: invalid YAML: {e}") from e
    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ValueError(f"{path}: expected a mapping at the top level")
    return config


def partial_update(template: dict, updates: dict) -> dict:
    """Recursively merge `updates` into a copy of `template`; None values are skipped."""

    def _partial_update(template: Any, update: Any) -> Any:
        if isinstance(template, dict) and isinstance(update, dict):
            for key, value in update.items():
                if key in template:
                    template[key] = _partial_update(template[key], value)
                elif isinstance(value, dict):
                    template[key] = _partial_update({}, value)
                elif value is not None:
                    template[key] = value
            return template

        return update if update is not None else template

    result = copy.deepcopy(template)
    return _partial_update(result, updates)


class ColorFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        color = LEVEL_COLORS.get(record.levelno)
        return f"{color}{message}{RESET}" if color else message


def color_enabled(config: LoggingConfig) -> bool:
    return config.color and not os.environ.get("NO_COLOR") and sys.stderr.isatty()


def setup_logging(config: LoggingConfig) -> logging.Logger:
    """Configure the package logger: stderr, optionally a file, optionally colours."""
    logger = logging.getLogger("hyperci")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = False

    if not config.enabled:
        logger.addHandler(logging.NullHandler())
        return logger

    logger.setLevel(config.log_level.value)

    console = logging.StreamHandler(sys.stderr)
    formatter_class = ColorFormatter if color_enabled(config) else logging.Formatter
    console.setFormatter(formatter_class(LOG_FORMAT))
    logger.addHandler(console)

    if config.log_file:
        file_handler = logging.FileHandler(config.log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(file_handler)

    return logger
