"""Centralized logging configuration for the toolkit."""

import logging
import sys


def setup_logging(level: str = "INFO") -> logging.Logger:
    """Configure and return the toolkit logger.

    Log lines go to stderr so that CSV and bundle text written to stdout
    stay machine-readable.

    Args:
        level: The log level string (DEBUG, INFO, WARNING, ERROR, CRITICAL).

    Returns:
        The configured ``beamsym`` logger.
    """
    log_format = "%(asctime)s | %(levelname)-8s | %(name)-30s | %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    logger = logging.getLogger("beamsym")
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    # Prevent duplicate handlers if called multiple times
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(log_format, datefmt=date_format))
        logger.addHandler(handler)
    logger.propagate = False

    return logger


def get_logger(name: str) -> logging.Logger:
    """Get a child logger under the beamsym namespace.

    Usage:
        from beamsym.core.logging import get_logger
        logger = get_logger(__name__)
        logger.info("Certified %d equations", count)

    Args:
        name: Usually __name__ of the calling module.

    Returns:
        A child logger with the given name.
    """
    if name.startswith("beamsym."):
        name = name[len("beamsym.") :]
    return logging.getLogger(f"beamsym.{name}")
