"""Logging utilities for rigidlab.

Every rigidlab logger hangs off the ``rigidlab`` namespace so that one call
to ``configure_logging()`` controls the whole library.  Logs always go to
stderr: stdout is reserved for reports and serialized graphs.
"""

import logging
import sys
from typing import Optional

NAMESPACE = "rigidlab"

DEFAULT_FORMAT = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s"
"""str: Default log format used by ``configure_logging``."""


def get_logger(name: str) -> logging.Logger:
    """Return a logger inside the ``rigidlab`` namespace.

    Args:
        name: Logger name, usually ``__name__``.  A missing ``rigidlab.``
            prefix is added.
    """
    if not name.startswith(NAMESPACE):
        name = f"{NAMESPACE}.{name}"
    return logging.getLogger(name)


def level_from_verbosity(verbosity: int) -> int:
    """Map a CLI ``-v`` count to a logging level (0 -> WARNING, 1 -> INFO, 2+ -> DEBUG)."""
    if verbosity <= 0:
        return logging.WARNING
    if verbosity == 1:
        return logging.INFO
    return logging.DEBUG


def configure_logging(level: int = logging.INFO, handler: Optional[logging.Handler] = None) -> None:
    """Set the level of the ``rigidlab`` logger and install a single handler.

    Repeated calls update the level but never stack handlers.

    Args:
        level: Logging level (default: INFO).
        handler: Custom handler; defaults to a ``StreamHandler`` on stderr.
    """
    root_logger = logging.getLogger(NAMESPACE)
    root_logger.setLevel(level)

    if root_logger.handlers:
        return
    handler = handler or logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(DEFAULT_FORMAT))
    root_logger.addHandler(handler)
