"""Logging for kahlerbochner.

Every module logs through the ``kahlerbochner`` logger or one of its children.
A single rich handler is attached to that logger, so library users keep
control of the root logger and pytest's ``caplog`` still sees the records.
"""

from __future__ import annotations

import logging

from rich.logging import RichHandler
from rich.traceback import install

from kahlerbochner.defaults import default_log_level

PACKAGE_LOGGER = "kahlerbochner"

FORMAT = "%(message)s"


def _configure_package_logger() -> logging.Logger:
    logger = logging.getLogger(PACKAGE_LOGGER)
    if any(isinstance(h, RichHandler) for h in logger.handlers):
        return logger

    # let rich print the traceback
    install(show_locals=True)

    handler = RichHandler(log_time_format="[%X]")
    handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(handler)
    logger.setLevel(default_log_level())
    return logger


def kahlerbochner_log(name: str | None = None) -> logging.Logger:
    """Return the package logger or one of its children.

    :param name: ``"kahlerbochner"`` or a dotted child such as
                 ``"kahlerbochner.verify"``; other names are nested under the
                 package logger. Defaults to the package logger.
    :type name: str, optional

    :return: logger sharing the single rich handler of the package logger
    :rtype: logging.Logger
    """
    _configure_package_logger()
    if not name or name == PACKAGE_LOGGER:
        return logging.getLogger(PACKAGE_LOGGER)
    if not name.startswith(f"{PACKAGE_LOGGER}."):
        name = f"{PACKAGE_LOGGER}.{name}"
    return logging.getLogger(name)
