"""
Logging configuration for the facility location toolkit.

This module sets up a consistent logging interface across the package.
Console output goes to stderr because stdout carries instance and result
lines that are piped between CLI subcommands.
"""
import logging
import sys
from typing import Optional

from .config import config


def setup_logger(
    name: str = "two_sided_flg",
    level: int = logging.WARNING,
    log_file: Optional[str] = None
) -> logging.Logger:
    """
    Set up and configure a logger.

    Args:
        name: Logger name
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path to write logs to

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Avoid adding handlers multiple times
    if logger.handlers:
        return logger

    formatter = logging.Formatter(
        fmt='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    return logger


def set_level(level: int) -> None:
    """Change the level of the package logger for the rest of the process."""
    logger.setLevel(level)


_level = logging.getLevelName(config.log.level)

# Default logger instance
logger = setup_logger(
    level=_level if isinstance(_level, int) else logging.WARNING,
    log_file=config.log.log_file,
)
