"""Tests for text and json-lines report emitters."""
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
import io
import json
import sys
import unittest

sys.path.append("..")  # noqa

from hypshtuka.model.check_result import CheckResult
from hypshtuka.model.output_format import OutputFormat
from hypshtuka.report_emitter import JsonLinesEmitter
from hypshtuka.report_emitter import TextEmitter
from hypshtuka.report_emitter import make_emitter


class TestTextEmitter(unittest.TestCase):
    """Tests for TextEmitter class."""

    def setUp(self):
        self.stream = io.StringIO()
        self.emitter = TextEmitter(self.stream)

    def test_pass_line(self):
        """Test the line of a passing check."""
        self.emitter.emit(CheckResult("threepoint N=1", "t", "t", True))
        self.assertEqual(
            "PASS threepoint N=1: t == t\n", self.stream.getvalue()
        )

    def test_fail_line(self):
        """Test the line of a failing check."""
        self.emitter.emit(CheckResult("hyp", "t^2", "t", False))
        self.assertEqual("FAIL hyp: t^2 != t\n", self.stream.getvalue())

    def test_error_line(self):
        """Test that the error name closes the line."""
        self.emitter.emit(CheckResult("hyp", "", "", False, "BadDegree"))
        self.assertEqual(
            "FAIL hyp:  !=  [BadDegree]\n", self.stream.getvalue()
        )

    def test_summary(self):
        """Test the closing line."""
        self.emitter.summary(3, 1)
        self.assertEqual("3 passed, 1 failed\n", self.stream.getvalue())


class TestJsonLinesEmitter(unittest.TestCase):
    """Tests for JsonLinesEmitter class."""

    def setUp(self):
        self.stream = io.StringIO()
        self.emitter = JsonLinesEmitter(self.stream)

    def test_compact_object(self):
        """Test one compact object per check."""
        self.emitter.emit(CheckResult("moore q=2", "t", "t", True))
        self.assertEqual(
            '{"check":"moore q=2","lhs":"t","rhs":"t","pass":true}\n',
            self.stream.getvalue(),
        )

    def test_error_key(self):
        """Test that errors add an error key."""
        self.emitter.emit(CheckResult("hyp", "", "", False, "NoRoot"))
        payload = json.loads(self.stream.getvalue())
        self.assertEqual("NoRoot", payload["error"])
        self.assertFalse(payload["pass"])

    def test_summary(self):
        """Test the closing object."""
        self.emitter.summary(2, 0)
        self.assertEqual('{"passed":2,"failed":0}\n', self.stream.getvalue())


class TestMakeEmitter(unittest.TestCase):
    """Tests for emitter selection."""

    def test_formats(self):
        """Test that each format gets its emitter."""
        stream = io.StringIO()
        self.assertIsInstance(
            make_emitter(OutputFormat.TEXT, stream), TextEmitter
        )
        self.assertIsInstance(
            make_emitter(OutputFormat.JSON_LINES, stream), JsonLinesEmitter
        )

    def test_default_stream(self):
        """Test that the default destination is standard output."""
        self.assertIs(sys.stdout, make_emitter(OutputFormat.TEXT).stream)
