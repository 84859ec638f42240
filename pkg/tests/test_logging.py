import io
import logging

import pytest

from rigidlab.logging import DEFAULT_FORMAT, configure_logging, get_logger, level_from_verbosity


class TestGetLogger:
    def test_returns_logger(self):
        assert isinstance(get_logger("test"), logging.Logger)

    def test_adds_rigidlab_prefix(self):
        assert get_logger("mymodule").name == "rigidlab.mymodule"

    def test_preserves_existing_prefix(self):
        assert get_logger("rigidlab.engine").name == "rigidlab.engine"


class TestLevelFromVerbosity:
    @pytest.mark.parametrize(
        "count,level", [(0, logging.WARNING), (1, logging.INFO), (2, logging.DEBUG), (5, logging.DEBUG)]
    )
    def test_mapping(self, count, level):
        assert level_from_verbosity(count) == level


class TestConfigureLogging:
    def teardown_method(self):
        root_logger = logging.getLogger("rigidlab")
        root_logger.handlers.clear()
        root_logger.setLevel(logging.NOTSET)

    def test_sets_log_level(self):
        configure_logging(level=logging.DEBUG)
        assert logging.getLogger("rigidlab").level == logging.DEBUG

    def test_does_not_duplicate_handlers(self):
        configure_logging()
        configure_logging(level=logging.WARNING)
        root_logger = logging.getLogger("rigidlab")
        assert len(root_logger.handlers) == 1
        assert root_logger.level == logging.WARNING

    def test_uses_custom_handler(self):
        stream = io.StringIO()
        configure_logging(handler=logging.StreamHandler(stream))
        get_logger("engine").info("rank trial done")
        output = stream.getvalue()
        assert "rank trial done" in output
        assert "| INFO     | rigidlab.engine |" in output

    def test_default_format(self):
        assert "%(levelname)" in DEFAULT_FORMAT
        assert "%(name)s" in DEFAULT_FORMAT
