"""Tests for LoggerFactory."""
#   Copyright 2026 The hyp-shtuka Authors
#
#   Licensed under the Apache License, Version 2.0 (the "License");
#   you may not use this file except in compliance with the License.
#   You may obtain a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS,
#   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#   See the License for the specific language governing permissions and
#   limitations under the License.
import logging
import os
import sys
import unittest

sys.path.append("..")  # noqa

from hypshtuka import logger_factory


def _drop_file_handlers():
    for logger in logger_factory.logger_factory.loggers:
        for handler in list(logger.handlers):
            if isinstance(handler, logging.FileHandler):
                handler.close()
                logger.removeHandler(handler)
    logger_factory.logger_factory.log_file = None


class TestLoggerFactory(unittest.TestCase):
    """Tests for LoggerFactory class."""

    test_log = "test.log"

    def tearDown(self):
        _drop_file_handlers()
        logger_factory.logger_factory.console = True
        logger_factory.logger_factory.set_context(None)
        logger_factory.logging_config("info")
        if os.path.exists(self.test_log):
            os.remove(self.test_log)

    def test_get_logger_with_level(self):
        """Test getting default logger with specified level."""
        logger = logger_factory.logger_factory.get_logger(
            "test_level", logging.NOTSET
        )
        self.assertEqual(logging.NOTSET, logger.level)

    def test_get_logger_twice_returns_same_logger(self):
        """Test that a name is issued once and handlers are not doubled."""
        first = logger_factory.logger_factory.get_logger("test_twice")
        count = len(first.handlers)
        second = logger_factory.logger_factory.get_logger("test_twice")
        self.assertIs(first, second)
        self.assertEqual(count, len(second.handlers))

    def test_logging_config_logger_with_log_file(self):
        """Test getting logger with log file."""
        logger_factory.logging_config("info", self.test_log)
        logger = logger_factory.logger_factory.get_logger(
            "test_with_file", logging.NOTSET
        )
        self.assertIsInstance(logger.handlers[1], logging.FileHandler)

    def test_logging_config_logger_only_log_file(self):
        """Test getting logger only with log file."""
        logger_factory.logging_config("info", self.test_log)
        logger_factory.logger_factory.console = False
        logger = logger_factory.logger_factory.get_logger("test_only_file")
        self.assertEqual(1, len(logger.handlers))
        self.assertIsInstance(logger.handlers[0], logging.FileHandler)

    def test_logging_config_attaches_file_to_issued_loggers(self):
        """Test that loggers issued earlier also write to the log file."""
        logger = logger_factory.logger_factory.get_logger("test_earlier")
        logger_factory.logging_config("info", self.test_log)
        self.assertTrue(
            any(isinstance(h, logging.FileHandler) for h in logger.handlers)
        )

    def test_logging_config_debug(self):
        """Test setting log level to debug."""
        logger_factory.logging_config("debug")
        self.assertEqual(logging.DEBUG, logger_factory.logger_factory.level)

    def test_logging_config_warning(self):
        """Test setting log level to warning updates issued loggers."""
        logger = logger_factory.logger_factory.get_logger("test_warning")
        logger_factory.logging_config("warning")
        self.assertEqual(logging.WARNING, logger.level)

    def test_logging_config_info_then_invalid(self):
        """Test setting log level to info and then to invalid value."""
        logger_factory.logging_config("info")
        logger_factory.logging_config("tests")
        self.assertEqual(logging.INFO, logger_factory.logger_factory.level)

    def test_set_context_tags_new_loggers(self):
        """Test that the context appears in the format of new loggers."""
        logger_factory.logger_factory.set_context("chi-zero")
        logger = logger_factory.logger_factory.get_logger("test_context")
        self.assertIn("'chi-zero'", logger.handlers[0].formatter._fmt)

    def test_set_context_tags_issued_loggers(self):
        """Test that loggers issued before the context also carry it."""
        logger = logger_factory.logger_factory.get_logger("test_before")
        logger_factory.logger_factory.set_context("hyp-relations")
        self.assertIn("'hyp-relations'", logger.handlers[0].formatter._fmt)
        logger_factory.logger_factory.set_context(None)
        self.assertNotIn("hyp-relations", logger.handlers[0].formatter._fmt)
