"""Tests for the hypergeometric ratio."""
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
import sys
import unittest

sys.path.append("..")  # noqa

from hypshtuka.conductor import restrict_to_D
from hypshtuka.divisor import Divisor
from hypshtuka.errors import InputError
from hypshtuka.errors import SupportMeetsConductor
from hypshtuka.errors import UndefinedRegime
from hypshtuka.errors import WrongRegime
from hypshtuka.errors import ZeroAlphaBeta
from hypshtuka.errors import ZeroConductor
from hypshtuka.fields import field_make
from hypshtuka.func import RatFunc
from hypshtuka.func import divisor_of
from hypshtuka.hyp import basic_exponent
from hypshtuka.hyp import epsilon
from hypshtuka.hyp import hyp
from hypshtuka.hyp import hyp_high
from hypshtuka.hyp import hyp_low
from hypshtuka.hyp import preset
from hypshtuka.hyp import preset_function
from hypshtuka.hyp import simple_example_case
from hypshtuka.hyp import three_point_case
from hypshtuka.model.hyp_method import HypMethod
from hypshtuka.rr import PrincipalPart

F2 = field_make(2)
F3 = field_make(3)


def _evaluate(case, method=HypMethod.ENUMERATE):
    return hyp(case.D, case.alpha, case.beta, case.E, method)


class TestExponent(unittest.TestCase):
    """Tests for the signed exponent."""

    def test_basic_exponent(self):
        """Test (q^|N| - 1)/(q - 1) with the sign of N."""
        self.assertEqual(1, basic_exponent(2, 1))
        self.assertEqual(7, basic_exponent(2, 3))
        self.assertEqual(-4, basic_exponent(3, -2))

    def test_epsilon_zero(self):
        """Test that N = 0 is rejected."""
        with self.assertRaises(InputError):
            epsilon(0)


class TestPresets(unittest.TestCase):
    """Tests for the named principal parts."""

    def test_preset_functions(self):
        """Test the representatives t, 1/(1 - t) and (t - 1)/t."""
        t = RatFunc.t(F3)
        self.assertEqual(t, preset_function("alpha_inf", F3))
        self.assertEqual(1 / (1 - t), preset_function("alpha_1", F3))
        self.assertEqual((t - 1) / t, preset_function("alpha_0", F3))

    def test_unknown_preset(self):
        """Test an unknown name."""
        with self.assertRaises(InputError):
            preset_function("alpha_2", F3)

    def test_preset_along_conductor(self):
        """Test that alpha_inf has no part at 0."""
        D = Divisor.infinity() + Divisor.at(F3.zero)
        alpha = preset("alpha_inf", D, F3)
        self.assertEqual([F3.one, F3.zero], alpha.coordinates())


class TestThreePoint(unittest.TestCase):
    """Tests for the closed-form evaluations."""

    def test_inf_zero_high(self):
        """Test Hyp = t and t^3 over F_2 for N = 1, 2."""
        t = RatFunc.t(F2)
        self.assertEqual(t, _evaluate(three_point_case("inf-zero", F2, 1)))
        self.assertEqual(
            t**3, _evaluate(three_point_case("inf-zero", F2, 2))
        )

    def test_inf_zero_low(self):
        """Test Hyp = 1/t over F_2 for N = -1."""
        t = RatFunc.t(F2)
        case = three_point_case("inf-zero", F2, -1)
        self.assertEqual(-3, case.E.degree)
        self.assertEqual(1 / t, _evaluate(case))

    def test_all_forms_over_f3(self):
        """Test each form over F_3 for N = 1, 2 and -1."""
        for form in ("inf-zero", "one-inf", "zero-one"):
            for N in (1, 2, -1):
                case = three_point_case(form, F3, N)
                self.assertEqual(case.expected, _evaluate(case))

    def test_moore_method_agrees(self):
        """Test the Moore determinant method on the high regime."""
        for N in (1, 2, 3):
            case = three_point_case("zero-one", F2, N)
            self.assertEqual(case.expected, _evaluate(case, HypMethod.MOORE))

    def test_unknown_form(self):
        """Test an unknown form."""
        with self.assertRaises(InputError):
            three_point_case("one-zero", F3, 1)

    def test_simple_example(self):
        """Test c^-1 t^e for every nonzero c in F_3."""
        for c in F3.nonzero_elements():
            case = simple_example_case(F3, 1, c)
            self.assertEqual(case.expected, _evaluate(case))

    def test_simple_example_zero_c(self):
        """Test that c = 0 is rejected."""
        with self.assertRaises(InputError):
            simple_example_case(F3, 1, 0)


class TestHypRelations(unittest.TestCase):
    """Tests for the algebraic relations of Hyp."""

    def setUp(self):
        self.case = three_point_case("inf-zero", F3, 2)

    def test_scaling(self):
        """Test Hyp(c alpha, beta) = c Hyp(alpha, beta)."""
        c = F3.from_int(2)
        case = self.case
        scaled = hyp(case.D, case.alpha.scale(c), case.beta, case.E)
        self.assertEqual(case.expected.scale(c), scaled)
        scaled = hyp(case.D, case.alpha, case.beta.scale(c), case.E)
        self.assertEqual(case.expected.scale(c.inverse()), scaled)

    def test_scaling_low_regime(self):
        """Test scaling in the low regime."""
        c = F3.from_int(2)
        case = three_point_case("inf-zero", F3, -1)
        scaled = hyp(case.D, case.alpha.scale(c), case.beta, case.E)
        self.assertEqual(case.expected.scale(c), scaled)

    def test_additivity(self):
        """Test Hyp(a1 + a2, b) = Hyp(a1, b) + Hyp(a2, b)."""
        case = self.case
        a1, a2 = PrincipalPart.basis(case.D, F3)
        total = hyp(case.D, a1 + a2, case.beta, case.E)
        parts = hyp(case.D, a1, case.beta, case.E) + hyp(
            case.D, a2, case.beta, case.E
        )
        self.assertEqual(parts, total)

    def test_additivity_low_regime(self):
        """Test additivity in alpha below -deg D."""
        case = three_point_case("inf-zero", F3, -1)
        a1, a2 = PrincipalPart.basis(case.D, F3)
        total = hyp(case.D, a1 + a2, case.beta, case.E)
        parts = hyp(case.D, a1, case.beta, case.E) + hyp(
            case.D, a2, case.beta, case.E
        )
        self.assertEqual(parts, total)

    def test_twist_by_principal_divisor(self):
        """Test Hyp(a, b, E + (f)) = Hyp(f a, f b, E) for f = (t+1)/(t+2)."""
        D = Divisor.infinity() + Divisor.at(F3.zero)
        alpha = preset("alpha_inf", D, F3)
        beta = preset("alpha_0", D, F3)
        E = -Divisor.at(F3.one)
        t = RatFunc.t(F3)
        f = (t + 1) / (t + 2)
        unit = restrict_to_D(f, D)
        twisted = hyp(D, alpha, beta, E + divisor_of(f))
        acted = hyp(D, alpha.act(unit), beta.act(unit), E)
        self.assertEqual(acted, twisted)
        self.assertEqual(t.scale(2), twisted)

    def test_methods_agree(self):
        """Test enumeration against Moore determinants on L(2[1] - [2])."""
        D = Divisor.infinity() + Divisor.at(F3.zero)
        alpha = preset("alpha_inf", D, F3)
        beta = preset("alpha_0", D, F3)
        E = Divisor.at(F3.one, 2) - Divisor.at(F3.from_int(2))
        self.assertEqual(
            hyp(D, alpha, beta, E, HypMethod.ENUMERATE),
            hyp(D, alpha, beta, E, HypMethod.MOORE),
        )


class TestHypErrors(unittest.TestCase):
    """Tests for rejected inputs."""

    def setUp(self):
        self.D = Divisor.infinity() + Divisor.at(F3.zero)
        self.alpha = preset("alpha_inf", self.D, F3)
        self.beta = preset("alpha_0", self.D, F3)

    def test_undefined_regime(self):
        """Test deg E = -2 with deg D = 2."""
        E = Divisor.at(F3.one, -2)
        with self.assertRaises(UndefinedRegime):
            hyp(self.D, self.alpha, self.beta, E)

    def test_wrong_regime(self):
        """Test calling each regime outside its range."""
        with self.assertRaises(WrongRegime):
            hyp_high(self.D, self.alpha, self.beta, Divisor.at(F3.one, -3))
        with self.assertRaises(WrongRegime):
            hyp_low(self.D, self.alpha, self.beta, Divisor.zero())

    def test_zero_alpha(self):
        """Test a zero principal part."""
        zero = PrincipalPart.zero(self.D, F3)
        with self.assertRaises(ZeroAlphaBeta):
            hyp(self.D, zero, self.beta, Divisor.zero())

    def test_support_meets_conductor(self):
        """Test E meeting D."""
        with self.assertRaises(SupportMeetsConductor):
            hyp(self.D, self.alpha, self.beta, Divisor.at(F3.zero, -1))

    def test_zero_conductor(self):
        """Test the zero conductor."""
        with self.assertRaises(ZeroConductor):
            hyp(Divisor.zero(), self.alpha, self.beta, Divisor.zero())
