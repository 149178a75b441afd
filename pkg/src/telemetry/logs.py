"""Logging configuration."""

import logging
import sys
from typing import Optional, TextIO

ROOT_LOGGER_NAME = "src"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_handler: Optional[logging.Handler] = None


def verbosity_to_level(verbosity: int) -> int:
    """Map a repeat count of ``-v`` to a logging level.

    Args:
        verbosity: Number of ``-v`` flags (0 or more)

    Returns:
        Logging level
    """
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG


def configure_logging(verbosity: int = 0, stream: Optional[TextIO] = None) -> logging.Logger:
    """Install a single stream handler on the package logger.

    Calling it again replaces the previous handler, so repeated CLI
    invocations in one process do not duplicate output.

    Args:
        verbosity: Number of ``-v`` flags
        stream: Target stream, stderr by default

    Returns:
        The configured package logger
    """
    global _handler

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    if _handler is not None:
        logger.removeHandler(_handler)

    _handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(_handler)
    logger.setLevel(verbosity_to_level(verbosity))
    return logger
