"""LoggerFactory Module."""
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
from typing import Dict
from typing import List
from typing import Optional


class LoggerFactory:
    """Factory for issuing ready to use loggers in other modules."""

    def __init__(
        self,
        level: int = logging.INFO,
        console: bool = True,
        log_file: Optional[str] = None,
    ) -> None:
        """
        Create a factory that will give loggers through calls to get_logger().

        :param level: Set the desired logging level
        :type level: int or None
        :param console: Should the log messages be outputted to the console
        :type console: bool or None
        :param log_file: Name of the log file to output to
        :type log_file: str or None
        """
        self.level = level
        self.context: Optional[str] = None
        self.console = console
        self.log_file = log_file
        self.loggers: List[logging.Logger] = []
        self._issued: Dict[str, logging.Logger] = {}

    def set_context(self, context: Optional[str]) -> None:
        """
        Set the tag embedded in every log line, e.g. the running scenario.

        Handlers of loggers issued earlier are given the new format too.

        :param context: Scenario or suite name, None to clear
        :type context: str or None
        """
        self.context = context
        formatter = self._formatter()
        for logger in self.loggers:
            for handler in logger.handlers:
                handler.setFormatter(formatter)

    def _formatter(self) -> logging.Formatter:
        if self.context is not None:
            return logging.Formatter(
                "%(asctime)s - '"
                + str(self.context)
                + "' - %(levelname)s [%(filename)s:%(lineno)s"
                + " - %(funcName)s()] - %(message)s"
            )
        return logging.Formatter(
            "%(asctime)s - %(levelname)s [%(filename)s:%(lineno)s"
            + " - %(funcName)s()] - %(message)s"
        )

    def get_logger(
        self, name: str, level: Optional[int] = None
    ) -> logging.Logger:
        """
        Return a ready to use logger instance.

        A name that was already issued returns the same logger without
        attaching another set of handlers.

        :param name: Name of the logger
        :type name: str
        :param level: Override the log level
        :type level: int or None

        :returns: Logger instance
        :rtype: logger
        """
        if name in self._issued:
            logger = self._issued[name]
            if level is not None:
                logger.setLevel(level)
            return logger

        logger = logging.getLogger(name)
        effective = level if level is not None else self.level
        logger.setLevel(effective)
        logger.propagate = False

        formatter = self._formatter()
        if self.console:
            console_handler = logging.StreamHandler()
            console_handler.setLevel(effective)
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

        if self.log_file is not None:
            file_handler = logging.FileHandler(self.log_file)
            file_handler.setLevel(effective)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        self.loggers.append(logger)
        self._issued[name] = logger
        return logger


# Logging levels available: NOTSET, INFO, DEBUG
logger_factory = LoggerFactory(level=logging.INFO)

LEVELS = {
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
    "critical": logging.CRITICAL,
    "notset": logging.NOTSET,
}


def logging_config(level: str, log_file: Optional[str] = None) -> None:
    """
    Set desired log level and designate a log file.

    Loggers issued before a log file is designated get a file handler
    attached here.

    :param level: Available levels : debug, info, warning, error, critical,
        notset
    :type level: str
    :param log_file: path to log file
    :type log_file: str or None
    """
    if level not in LEVELS:
        print(f"Invalid level '{level}'")
        return

    if log_file is not None and log_file != logger_factory.log_file:
        logger_factory.log_file = log_file
        for logger in logger_factory.loggers:
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(logger_factory._formatter())
            logger.addHandler(file_handler)

    logger_factory.level = LEVELS[level]

    for logger in logger_factory.loggers:
        logger.setLevel(logger_factory.level)
        for handler in logger.handlers:
            handler.setLevel(logger_factory.level)
