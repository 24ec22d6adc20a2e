"""Write check outcomes to an output stream."""
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
from abc import ABC
from abc import abstractmethod

from hypshtuka.model.check_result import CheckResult


class ReportEmitter(ABC):
    """Serialize check outcomes as they are produced."""

    @abstractmethod
    def emit(self, result: CheckResult) -> None:
        """
        Write one check outcome.

        :param result: Outcome of a check
        :type result: CheckResult
        """
        raise NotImplementedError()

    @abstractmethod
    def summary(self, passed: int, failed: int) -> None:
        """
        Write the closing line of a report.

        :param passed: Number of passing checks
        :type passed: int
        :param failed: Number of failing checks
        :type failed: int
        """
        raise NotImplementedError()
