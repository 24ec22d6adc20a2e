"""Outcome of a single verification check."""
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
from dataclasses import dataclass
from dataclasses import field
from typing import Optional


@dataclass
class CheckResult:
    """
    Both sides of an exact comparison in canonical form.

    :ivar check: Name of the check, including its parameters
    :vartype check: str
    :ivar lhs: Canonical text of the computed side
    :vartype lhs: str
    :ivar rhs: Canonical text of the expected side
    :vartype rhs: str
    :ivar passed: Whether both sides are equal
    :vartype passed: bool
    :ivar error: Name of the error that aborted the check
    :vartype error: str or None
    """

    check: str
    lhs: str
    rhs: str
    passed: bool
    error: Optional[str] = field(default=None)

    def to_dict(self) -> dict:
        """
        Mapping used by the json-lines emitter.

        :returns: check, lhs, rhs and pass keys
        :rtype: dict
        """
        return {
            "check": self.check,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }
