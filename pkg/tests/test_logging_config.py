import importlib
import io
import logging

import pytest

from multieuler import LOGGER_NAMES, configure_logging, get_logger
from multieuler.exceptions import ValidationException
from multieuler.logging_config import LEVELS


@pytest.fixture(autouse=True)
def restore_package_logger():
    pkg = logging.getLogger("multieuler")
    saved = (pkg.level, list(pkg.handlers), pkg.propagate)
    yield
    pkg.setLevel(saved[0])
    pkg.handlers[:] = saved[1]
    pkg.propagate = saved[2]
    for name in LOGGER_NAMES.values():
        if name != "multieuler":
            logging.getLogger(name).setLevel(logging.NOTSET)


class TestLoggingConfig:
    """configure_logging and get_logger."""

    def test_alias_resolution(self):
        assert get_logger("analysis").name == "multieuler.analysis"
        assert get_logger("multieuler.suites").name == "multieuler.suites"

    def test_aliases_cover_modules(self):
        modules = ("grammar", "enumeration", "recurrences", "analysis", "series", "suites", "cli")
        for alias in modules:
            assert LOGGER_NAMES[alias] == f"multieuler.{alias}"

    @pytest.mark.parametrize("alias", sorted(set(LOGGER_NAMES) - {"package"}))
    def test_every_alias_names_a_logging_module(self, alias):
        module = importlib.import_module(LOGGER_NAMES[alias])
        assert module.logger.name == LOGGER_NAMES[alias]

    @pytest.mark.parametrize(
        "level, expected", [("debug", logging.DEBUG), ("WARN", logging.WARNING), (15, 15)]
    )
    def test_levels(self, level, expected):
        configure_logging(level, handler=logging.NullHandler())
        assert logging.getLogger("multieuler").level == expected

    def test_module_levels(self):
        configure_logging(
            logging.WARNING,
            module_levels={"analysis": "DEBUG", "multieuler.suites": logging.INFO},
            handler=logging.NullHandler(),
        )
        assert logging.getLogger("multieuler.analysis").level == logging.DEBUG
        assert logging.getLogger("multieuler.suites").level == logging.INFO

    def test_repeated_calls_replace_handler(self):
        pkg = logging.getLogger("multieuler")
        pkg.handlers[:] = []
        configure_logging("INFO")
        configure_logging("INFO")
        assert len(pkg.handlers) == 1
        assert pkg.handlers[0].stream is not None

    def test_foreign_handlers_survive(self):
        pkg = logging.getLogger("multieuler")
        foreign = logging.NullHandler()
        pkg.handlers[:] = [foreign]
        configure_logging("INFO", handler=logging.NullHandler())
        configure_logging("INFO", handler=logging.NullHandler())
        assert foreign in pkg.handlers
        assert len(pkg.handlers) == 2

    def test_custom_handler_output(self):
        stream = io.StringIO()
        configure_logging(
            "INFO", handler=logging.StreamHandler(stream), fmt="%(name)s %(message)s"
        )
        get_logger("suites").info("ran")
        assert stream.getvalue() == "multieuler.suites ran\n"

    def test_unknown_level(self):
        with pytest.raises(ValidationException, match="Unknown log level 'LOUD'"):
            configure_logging("LOUD")

    def test_bad_module_level_leaves_handlers(self):
        pkg = logging.getLogger("multieuler")
        before = list(pkg.handlers)
        with pytest.raises(ValidationException):
            configure_logging("INFO", module_levels={"analysis": "LOUD"})
        assert pkg.handlers == before

    def test_level_names(self):
        assert LEVELS == ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
