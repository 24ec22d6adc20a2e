"""Text and json-lines report emitters."""
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
import json
import sys
from typing import Optional
from typing import TextIO

from hypshtuka import logger_factory
from hypshtuka.interface.report_emitter import ReportEmitter
from hypshtuka.model.check_result import CheckResult
from hypshtuka.model.output_format import OutputFormat

logger = logger_factory.logger_factory.get_logger(__name__)


class TextEmitter(ReportEmitter):
    """
    One line per check, ``PASS`` or ``FAIL`` first.

    :ivar stream: Destination of the report
    :vartype stream: TextIO
    """

    def __init__(self, stream: Optional[TextIO] = None) -> None:
        self.stream = sys.stdout if stream is None else stream

    def emit(self, result: CheckResult) -> None:
        status = "PASS" if result.passed else "FAIL"
        relation = "==" if result.passed else "!="
        line = f"{status} {result.check}: {result.lhs} {relation} {result.rhs}"
        if result.error:
            line += f" [{result.error}]"
        self.stream.write(line + "\n")

    def summary(self, passed: int, failed: int) -> None:
        self.stream.write(f"{passed} passed, {failed} failed\n")


class JsonLinesEmitter(ReportEmitter):
    """
    One JSON object per check with the keys check, lhs, rhs and pass.

    The summary is a final object with the keys passed and failed.

    :ivar stream: Destination of the report
    :vartype stream: TextIO
    """

    def __init__(self, stream: Optional[TextIO] = None) -> None:
        self.stream = sys.stdout if stream is None else stream

    def emit(self, result: CheckResult) -> None:
        payload = result.to_dict()
        if result.error:
            payload["error"] = result.error
        self.stream.write(json.dumps(payload, separators=(",", ":")) + "\n")

    def summary(self, passed: int, failed: int) -> None:
        self.stream.write(
            json.dumps(
                {"passed": passed, "failed": failed}, separators=(",", ":")
            )
            + "\n"
        )


def make_emitter(
    output_format: OutputFormat, stream: Optional[TextIO] = None
) -> ReportEmitter:
    """
    Emitter for the requested format.

    :param output_format: Report format
    :type output_format: OutputFormat
    :param stream: Destination, standard output when omitted
    :type stream: TextIO or None
    :returns: emitter
    :rtype: ReportEmitter
    """
    logger.debug(f"Using {output_format.value} report format")
    if output_format == OutputFormat.JSON_LINES:
        return JsonLinesEmitter(stream)
    return TextEmitter(stream)
