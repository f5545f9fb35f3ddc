"""
Logging for the toolkit: every logger writes to the current sys.stderr so
stdout carries nothing but command output
"""

import logging
import sys


PROJECT_PREFIX = "lpa_toolkit"
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DATE_FORMAT = '%Y-%m-%d %H:%M:%S'


class StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stderr is at emit time"""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value):
        # always resolved at emit time
        pass


def _formatter() -> logging.Formatter:
    return logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)


def setup_logger(name: str, level: str = "WARNING", log_file: str = None) -> logging.Logger:
    """
    Setup a logger with the toolkit's format

    Args:
        name: Logger name (typically __name__)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional file path to also write logs to

    Returns:
        Configured logger instance; an already configured logger is returned unchanged
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(getattr(logging, level.upper()))
    logger.propagate = False

    handlers: list[logging.Handler] = [StderrHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    for handler in handlers:
        handler.setFormatter(_formatter())
        logger.addHandler(handler)

    return logger


def get_project_logger(module_name: str, verbose: bool = False) -> logging.Logger:
    """Logger for a toolkit module; DEBUG when verbose, WARNING otherwise"""
    return setup_logger(module_name, "DEBUG" if verbose else "WARNING")


def is_project_logger(name: str) -> bool:
    return name == PROJECT_PREFIX or name.startswith(PROJECT_PREFIX + ".")


def set_project_log_level(level: str) -> None:
    """Apply a level to every toolkit logger created so far"""
    numeric = getattr(logging, level.upper())
    for name, logger in logging.Logger.manager.loggerDict.items():
        if is_project_logger(name) and isinstance(logger, logging.Logger):
            logger.setLevel(numeric)


def setup_module_logger(module_name: str, verbose: bool = False) -> logging.Logger:
    """
    Convenience alias used by entry points

    Usage:
        from lpa_toolkit.shared.logging_config import setup_module_logger
        logger = setup_module_logger(__name__)
    """
    return get_project_logger(module_name, verbose)
