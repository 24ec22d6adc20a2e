"""
Exact function field arithmetic on the projective line over F_q.

Computes Moore determinants, hypergeometric ratios in both degree regimes,
divisor classes modulo a conductor, and Catalan-Drinfeld symbols of rank
one shtukas with a generic basepoint. Every result is exact and printed in
a canonical form, so identities can be verified by string comparison.

To run the built-in verification suites::

    python -m hypshtuka verify all
"""
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
__version__ = "1.0.0"
from .interface.coefficient_field import CoefficientField
from .interface.report_emitter import ReportEmitter
from .logger_factory import logging_config
from .model.check_result import CheckResult
from .model.hyp_method import HypMethod
from .model.output_format import OutputFormat
from .model.point import INFINITY
from .model.point import Closed
from .model.point import Finite
from .model.point import Infinity
from .model.symbol_method import SymbolMethod
from .errors import HypShtukaError
from .errors import InputError
from .errors import ComputationError
from .poly import Poly
from .fields import FieldDesc
from .fields import FieldElem
from .fields import KElem
from .fields import KField
from .fields import field_make
from .fields import field_of_order
from .fields import frobenius
from .fields import k_field
from .func import RatFunc
from .func import divisor_of
from .func import rf_eval
from .func import rf_twist
from .divisor import Divisor
from .divisor import closed_point
from .rr import Differential
from .rr import PrincipalPart
from .rr import principal_part_of
from .rr import residue
from .rr import rr_basis
from .conductor import equivalent_mod_D
from .conductor import restrict_to_D
from .moore import moore_det
from .moore import moore_product
from .hyp import hyp
from .hyp import hyp_high
from .hyp import hyp_low
from .shtuka import Shtuka
from .shtuka import cd_symbol
from .shtuka import psi_lift
from .shtuka import shtuka_from_E0_case1
from .shtuka import shtuka_from_E0_case2
from .shtuka import shtuka_validate
from .report_emitter import JsonLinesEmitter
from .report_emitter import TextEmitter
from .scenario import ScenarioRunner


__all__ = [
    "CheckResult",
    "Closed",
    "CoefficientField",
    "ComputationError",
    "Differential",
    "Divisor",
    "FieldDesc",
    "FieldElem",
    "Finite",
    "HypMethod",
    "HypShtukaError",
    "INFINITY",
    "Infinity",
    "InputError",
    "JsonLinesEmitter",
    "KElem",
    "KField",
    "OutputFormat",
    "Poly",
    "PrincipalPart",
    "RatFunc",
    "ReportEmitter",
    "ScenarioRunner",
    "Shtuka",
    "SymbolMethod",
    "TextEmitter",
    "cd_symbol",
    "closed_point",
    "divisor_of",
    "equivalent_mod_D",
    "field_make",
    "field_of_order",
    "frobenius",
    "hyp",
    "hyp_high",
    "hyp_low",
    "k_field",
    "logging_config",
    "moore_det",
    "moore_product",
    "principal_part_of",
    "psi_lift",
    "residue",
    "restrict_to_D",
    "rf_eval",
    "rf_twist",
    "rr_basis",
    "shtuka_from_E0_case1",
    "shtuka_from_E0_case2",
    "shtuka_validate",
    "__version__",
]
