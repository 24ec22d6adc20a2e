"""Tests for the command line."""
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
import os
import sys
import unittest
from contextlib import redirect_stderr
from contextlib import redirect_stdout

sys.path.append("..")  # noqa

from hypshtuka import logger_factory
from hypshtuka.cli import EXIT_FAILED
from hypshtuka.cli import EXIT_INPUT
from hypshtuka.cli import EXIT_OK
from hypshtuka.cli import main

HYP_ARGS = [
    "hyp",
    "--q",
    "3",
    "--conductor",
    "[inf]+[0]",
    "--alpha",
    "alpha_inf",
    "--beta",
    "alpha_0",
    "--E=-[1]",
]


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):
    """Tests for main."""

    scenario_file = "cli_scenario_test.txt"

    def tearDown(self):
        logger_factory.logger_factory.set_context(None)
        logger_factory.logging_config("info")
        if os.path.exists(self.scenario_file):
            os.remove(self.scenario_file)

    def write_scenario(self, text):
        with open(self.scenario_file, "w", encoding="utf-8") as file:
            file.write(text)

    def test_hyp(self):
        """Test a ratio printed as text."""
        code, out, _ = run(HYP_ARGS)
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("t\n", out)

    def test_hyp_json(self):
        """Test a ratio printed as one JSON object."""
        code, out, _ = run(["--format", "json-lines"] + HYP_ARGS)
        self.assertEqual(EXIT_OK, code)
        self.assertEqual('{"hyp":"t"}\n', out)

    def test_hyp_undefined_regime(self):
        """Test that an input error exits with 2."""
        argv = HYP_ARGS[:-1] + ["--E=-2*[1]"]
        code, out, err = run(argv)
        self.assertEqual(EXIT_INPUT, code)
        self.assertEqual("", out)
        self.assertIn("UndefinedRegime", err)

    def test_bad_field(self):
        """Test that an order which is not a prime power exits with 2."""
        argv = ["hyp", "--q", "6"] + HYP_ARGS[3:]
        code, _, err = run(argv)
        self.assertEqual(EXIT_INPUT, code)
        self.assertIn("error:", err)

    def test_missing_arguments(self):
        """Test that argparse errors exit with 2."""
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                main(["hyp", "--q", "3"])
        self.assertEqual(2, context.exception.code)

    def test_max_enum_must_be_positive(self):
        """Test that a zero enumeration cap is an input error."""
        code, _, _ = run(["--max-enum", "0"] + HYP_ARGS)
        self.assertEqual(EXIT_INPUT, code)

    def test_budget_exceeded(self):
        """Test that a computation error exits with 1."""
        argv = [
            "--max-enum",
            "3",
            "moore",
            "--q",
            "2^4",
            "--scalars",
            "2",
            "--elements",
            "u,1,u^2",
            "--product",
        ]
        code, _, err = run(argv)
        self.assertEqual(EXIT_FAILED, code)
        self.assertIn("BudgetExceeded", err)

    def test_moore_product(self):
        """Test both sides of the Moore identity."""
        argv = ["moore", "--q", "2", "--elements", "t,1", "--product"]
        code, out, _ = run(argv)
        self.assertEqual(EXIT_OK, code)
        det, product = out.splitlines()
        self.assertEqual(det, product)

    def test_rr_basis(self):
        """Test the dimension of L(2[inf])."""
        code, out, _ = run(["rr-basis", "--q", "3", "--E", "2*[inf]"])
        self.assertEqual(EXIT_OK, code)
        self.assertEqual(3, len(out.splitlines()))

    def test_residue(self):
        """Test the residue of dt/t at the origin."""
        argv = ["residue", "--q", "3", "--omega", "1/t", "--point", "0"]
        code, out, _ = run(argv)
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("1\n", out)

    def test_classgroup(self):
        """Test equivalence modulo the conductor."""
        argv = ["classgroup", "--q", "3", "--conductor", "[inf]+[0]"]
        code, out, _ = run(argv + ["--e1", "[1]", "--e2", "[2]"])
        self.assertEqual(EXIT_OK, code)
        self.assertEqual("not equivalent\n", out)
        code, out, _ = run(argv + ["--e1", "[1]", "--e2", "[1]"])
        self.assertEqual("1\n", out)

    def test_symbol_all_methods(self):
        """Test that every symbol method agrees."""
        argv = [
            "symbol",
            "--q",
            "3",
            "--conductor",
            "[inf]+[0]",
            "--case",
            "1",
            "--N",
            "1",
            "--E0=-[1]",
            "--alpha",
            "alpha_inf",
            "--beta",
            "alpha_0",
            "--all-methods",
        ]
        code, out, _ = run(argv)
        self.assertEqual(EXIT_OK, code)
        lines = out.splitlines()
        self.assertIn("solve: tau", lines)
        self.assertEqual("agree", lines[-1])

    def test_tau_identity(self):
        """Test the twisting identity report line."""
        code, out, _ = run(["tau-identity", "--q", "3", "--N", "1"])
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(out.startswith("PASS tau-identity q=3 N=1 c=1:"))

    def test_verify_scenario(self):
        """Test a passing scenario file."""
        self.write_scenario("check threepoint q=2 form=inf-zero N=1\n")
        code, out, _ = run(["verify", self.scenario_file])
        self.assertEqual(EXIT_OK, code)
        self.assertTrue(out.endswith("1 passed, 0 failed\n"))

    def test_verify_failing_scenario(self):
        """Test that a failing check exits with 1."""
        self.write_scenario(
            "check hyp q=3 conductor='[inf]+[0]' alpha=alpha_inf "
            "beta=alpha_0 E='-[1]' expected=t^2\n"
        )
        code, out, _ = run(["verify", self.scenario_file])
        self.assertEqual(EXIT_FAILED, code)
        self.assertIn("FAIL hyp", out)

    def test_verify_malformed_scenario(self):
        """Test that a malformed scenario exits with 2."""
        self.write_scenario("check nonsense q=2\n")
        code, _, err = run(["verify", self.scenario_file])
        self.assertEqual(EXIT_INPUT, code)
        self.assertIn("ParseError", err)
