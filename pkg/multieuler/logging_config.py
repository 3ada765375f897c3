"""Logger setup for multieuler.

Modules log under ``multieuler.<module>``. Progress of table construction,
grammar derivation, transfer tallies and Sturm bisection goes to DEBUG;
suite summaries to INFO; failed verification checks to WARNING.
"""

from __future__ import annotations

import logging
import sys
from typing import Dict, Optional, Union

from .exceptions import ValidationException

__all__ = ["configure_logging", "get_logger", "LOGGER_NAMES", "LEVELS"]

LOGGER_NAMES = {
    "package": "multieuler",
    "grammar": "multieuler.grammar",
    "enumeration": "multieuler.enumeration",
    "recurrences": "multieuler.recurrences",
    "analysis": "multieuler.analysis",
    "series": "multieuler.series",
    "families": "multieuler.families",
    "suites": "multieuler.suites",
    "cli": "multieuler.cli",
}

_DEFAULT_FORMAT = "%(asctime)s %(levelname)-8s %(name)s - %(message)s"
_DEFAULT_DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# set on handlers installed here so a later call can replace them
_OWNED = "_multieuler_owned"


def get_logger(name: str) -> logging.Logger:
    """Logger by dotted path or by a short alias from :data:`LOGGER_NAMES`."""
    return logging.getLogger(LOGGER_NAMES.get(name, name))


def configure_logging(
    level: Union[int, str] = logging.WARNING,
    *,
    module_levels: Optional[Dict[str, Union[int, str]]] = None,
    handler: Optional[logging.Handler] = None,
    fmt: str = _DEFAULT_FORMAT,
    datefmt: str = _DEFAULT_DATE_FORMAT,
    propagate: bool = True,
) -> None:
    """Configure logging for the multieuler package.

    Sets *level* on the ``multieuler`` logger and installs one handler on it,
    a stderr stream handler unless *handler* is given. Standard output is
    reserved for command results. Calling again replaces the handler from the
    previous call, so the command line can be run many times in one process.

    Args:
        level: Level for the whole package, as an int or one of :data:`LEVELS`.
        module_levels: Per-logger overrides keyed by dotted path or alias::

                configure_logging(
                    level="WARNING",
                    module_levels={"suites": "INFO", "multieuler.analysis": "DEBUG"},
                )

        handler: Handler to install instead of the stderr stream handler.
        fmt: Log record format string.
        datefmt: Date/time format string for the formatter.
        propagate: Whether package records also reach the root logger.

    Raises:
        ValidationException: on an unknown level name.
    """
    pkg_logger = logging.getLogger(LOGGER_NAMES["package"])
    pkg_logger.setLevel(_resolve_level(level))
    pkg_logger.propagate = propagate
    overrides = {
        LOGGER_NAMES.get(path, path): _resolve_level(lvl)
        for path, lvl in (module_levels or {}).items()
    }

    for old in [h for h in pkg_logger.handlers if getattr(h, _OWNED, False)]:
        pkg_logger.removeHandler(old)
    installed = handler if handler is not None else logging.StreamHandler(sys.stderr)
    installed.setFormatter(logging.Formatter(fmt=fmt, datefmt=datefmt))
    setattr(installed, _OWNED, True)
    pkg_logger.addHandler(installed)

    for name, numeric in overrides.items():
        logging.getLogger(name).setLevel(numeric)


def _resolve_level(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    name = level.upper()
    if name == "WARN":
        name = "WARNING"
    if name not in LEVELS:
        raise ValidationException(
            f"Unknown log level {level!r}. Valid names: {', '.join(LEVELS)}"
        )
    return int(getattr(logging, name))
