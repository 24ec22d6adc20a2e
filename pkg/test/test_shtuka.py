"""Tests for shtukas and the Catalan-Drinfeld symbol."""
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

from hypshtuka.divisor import Divisor
from hypshtuka.errors import BadDegree
from hypshtuka.errors import InputError
from hypshtuka.errors import NonGenericBasepoint
from hypshtuka.errors import NoDecomposition
from hypshtuka.errors import RelationFails
from hypshtuka.errors import SupportMeetsConductor
from hypshtuka.errors import ZeroAlphaBeta
from hypshtuka.fields import field_make
from hypshtuka.fields import k_field
from hypshtuka.func import RatFunc
from hypshtuka.hyp import preset
from hypshtuka.model.point import Finite
from hypshtuka.model.symbol_method import SymbolMethod
from hypshtuka.rr import PrincipalPart
from hypshtuka.shtuka import cd_symbol
from hypshtuka.shtuka import chi_zero_rank
from hypshtuka.shtuka import cohomology_vanishes
from hypshtuka.shtuka import drinfeld_iterates
from hypshtuka.shtuka import nondegenerate
from hypshtuka.shtuka import psi_lift
from hypshtuka.shtuka import rank_over_K
from hypshtuka.shtuka import shtuka_from_E0_case1
from hypshtuka.shtuka import shtuka_from_E0_case2
from hypshtuka.shtuka import shtuka_validate
from hypshtuka.shtuka import special_function
from hypshtuka.shtuka import tau_identity

F2 = field_make(2)
F3 = field_make(3)


class TestShtukaCase1(unittest.TestCase):
    """Tests on the case 1 shtuka with N = 1 and E0 = -[1] over F_3."""

    def setUp(self):
        self.K = k_field(F3, F3)
        self.tau = self.K.tau
        self.D = Divisor.infinity() + Divisor.at(F3.zero)
        self.alpha = preset("alpha_inf", self.D, F3)
        self.beta = preset("alpha_0", self.D, F3)
        self.shtuka = shtuka_from_E0_case1(
            self.D, self.tau, 1, -Divisor.at(F3.one)
        )

    def test_shape(self):
        """Test the zero and the divisor of the built shtuka."""
        self.assertEqual(Finite(self.tau**3), self.shtuka.eta)
        self.assertEqual(-1, self.shtuka.E.degree)
        self.assertEqual(1, self.shtuka.shape.case)
        self.assertTrue(nondegenerate(self.shtuka))

    def test_special_function(self):
        """Test that the special function is one for this shtuka."""
        self.assertTrue(special_function(self.shtuka).is_one())

    def test_psi_lift(self):
        """Test the liftings t - 1 and (t - 1)/t."""
        t = RatFunc.t(self.K)
        self.assertEqual(t - 1, psi_lift(self.shtuka, self.alpha))
        self.assertEqual((t - 1) / t, psi_lift(self.shtuka, self.beta))

    def test_symbol_methods_agree(self):
        """Test that every method gives tau."""
        for method in SymbolMethod:
            value = cd_symbol(self.shtuka, self.alpha, self.beta, method)
            self.assertEqual(self.tau, value)

    def test_symbol_zero_alpha(self):
        """Test a zero principal part."""
        zero = PrincipalPart.zero(self.D, F3)
        with self.assertRaises(ZeroAlphaBeta):
            cd_symbol(self.shtuka, zero, self.beta)

    def test_bad_decomposition(self):
        """Test an explicit split that is not E."""
        E1 = Divisor.zero()
        E2 = Divisor.at(self.K.constant(2))
        with self.assertRaises(NoDecomposition):
            cd_symbol(
                self.shtuka,
                self.alpha,
                self.beta,
                SymbolMethod.DETERMINANT,
                (E1, E2),
            )

    def test_cohomology(self):
        """Test vanishing and uniqueness of liftings."""
        self.assertTrue(
            cohomology_vanishes(self.shtuka, [self.alpha, self.beta])
        )

    def test_chi_zero_rank(self):
        """Test that psi and its twist are independent."""
        D1 = Divisor.infinity(2)
        self.assertEqual(2, chi_zero_rank(self.shtuka, D1, 1, 1))

    def test_chi_zero_rank_rejects(self):
        """Test out of range parameters."""
        D1 = Divisor.infinity(2)
        with self.assertRaises(InputError):
            chi_zero_rank(self.shtuka, D1, 2, 1)
        with self.assertRaises(InputError):
            chi_zero_rank(self.shtuka, D1, 0, 0)

    def test_format(self):
        """Test the text of the quadruple."""
        self.assertEqual(
            "([inf]+[0], tau, [tau^3], -[1])", self.shtuka.format()
        )


class TestShtukaValidation(unittest.TestCase):
    """Tests for shtuka_validate and the builders."""

    def setUp(self):
        self.K = k_field(F3, F3)
        self.tau = self.K.tau
        self.D = Divisor.infinity() + Divisor.at(F3.zero)
        self.E = -Divisor.at(F3.one)

    def test_valid(self):
        """Test the quadruple (D, tau, tau^3, -[1])."""
        s = shtuka_validate(self.D, self.tau, self.tau**3, self.E)
        self.assertIsNone(s.shape)
        self.assertEqual(Finite(self.tau**3), s.pole)

    def test_constant_basepoint(self):
        """Test that a constant basepoint is rejected."""
        with self.assertRaises(NonGenericBasepoint):
            shtuka_validate(self.D, self.K.one, self.tau, self.E)

    def test_bad_degree(self):
        """Test that deg E must be -1."""
        with self.assertRaises(BadDegree):
            shtuka_validate(self.D, self.tau, self.tau**3, Divisor.zero())

    def test_relation_fails(self):
        """Test a zero that breaks the relation modulo D."""
        with self.assertRaises(RelationFails):
            shtuka_validate(self.D, self.tau, self.tau, self.E)

    def test_meets_conductor(self):
        """Test E meeting D."""
        with self.assertRaises(SupportMeetsConductor):
            shtuka_validate(
                self.D, self.tau, self.tau**3, -Divisor.at(F3.zero)
            )

    def test_case1_wrong_degree(self):
        """Test E0 of the wrong degree."""
        with self.assertRaises(BadDegree):
            shtuka_from_E0_case1(self.D, self.tau, 2, self.E)

    def test_case1_nonpositive_n(self):
        """Test N <= 0."""
        with self.assertRaises(InputError):
            shtuka_from_E0_case1(self.D, self.tau, 0, self.E)

    def test_case2_small_n(self):
        """Test N <= deg D - 2."""
        with self.assertRaises(InputError):
            shtuka_from_E0_case2(self.D, self.tau, 0, -Divisor.at(F3.one, 2))


class TestShtukaCase2(unittest.TestCase):
    """Tests on a case 2 shtuka over F_3."""

    def setUp(self):
        self.K = k_field(F3, F3)
        self.D = Divisor.infinity() + Divisor.at(F3.zero)
        self.alpha = preset("alpha_inf", self.D, F3)
        self.beta = preset("alpha_0", self.D, F3)
        self.shtuka = shtuka_from_E0_case2(
            self.D, self.K.tau, 1, -Divisor.at(F3.one, 3)
        )

    def test_shape(self):
        """Test basepoint and zero."""
        self.assertEqual(self.K.tau**3, self.shtuka.xi)
        self.assertEqual(Finite(self.K.tau), self.shtuka.eta)

    def test_symbol_methods_agree(self):
        """Test that every method gives 1/tau."""
        expected = 1 / self.K.tau
        for method in SymbolMethod:
            value = cd_symbol(self.shtuka, self.alpha, self.beta, method)
            self.assertEqual(expected, value)

    def test_cohomology(self):
        """Test vanishing when the basepoint lies in the support of E."""
        self.assertTrue(
            cohomology_vanishes(self.shtuka, [self.alpha, self.beta])
        )

    def test_lifting_built_once(self):
        """Test that the lifting data is kept on the shtuka."""
        psi_lift(self.shtuka, self.alpha)
        self.assertIs(self.shtuka.lifting, self.shtuka.lifting)


class TestBasepointInNegativePart(unittest.TestCase):
    """Tests on (D, tau, tau^3, -[tau]) over F_2."""

    def setUp(self):
        self.K = k_field(F2, F2)
        tau = self.K.tau
        self.D = Divisor.infinity() + Divisor.at(F2.zero)
        self.shtuka = shtuka_validate(
            self.D, tau, tau**3, -Divisor.point(Finite(tau))
        )
        self.alphas = [
            preset("alpha_inf", self.D, F2),
            preset("alpha_0", self.D, F2),
        ]

    def test_lifts_vanish_at_basepoint(self):
        """Test that every lifting vanishes at xi."""
        self.assertTrue(nondegenerate(self.shtuka))
        for alpha in self.alphas:
            psi = psi_lift(self.shtuka, alpha)
            self.assertTrue(psi(self.shtuka.xi).is_zero())

    def test_cohomology(self):
        """Test that a zero of the liftings at xi is not a failure."""
        self.assertTrue(cohomology_vanishes(self.shtuka, self.alphas))


class TestIterates(unittest.TestCase):
    """Tests for drinfeld_iterates and rank_over_K."""

    def setUp(self):
        self.K = k_field(F3, F3)
        self.t = RatFunc.t(self.K)

    def test_iterates(self):
        """Test psi_(k+1) = f * psi_k^(1)."""
        psi = self.t - self.K.tau
        iterates = drinfeld_iterates(self.t, psi, 2)
        self.assertEqual(3, len(iterates))
        self.assertEqual(self.t * (self.t - self.K.tau**3), iterates[1])

    def test_rank(self):
        """Test ranks of dependent and independent functions."""
        one = RatFunc.one(self.K)
        self.assertEqual(2, rank_over_K([one, self.t, self.t + 1]))
        self.assertEqual(
            1, rank_over_K([self.t, self.t.scale(self.K.tau)])
        )
        self.assertEqual(0, rank_over_K([]))

    def test_rank_base_field_functions(self):
        """Test that functions over F_q are lifted to K."""
        t = RatFunc.t(F3)
        self.assertEqual(2, rank_over_K([t, 1 / t]))


class TestTauIdentity(unittest.TestCase):
    """Tests for tau_identity."""

    def test_positive_n(self):
        """Test both sides for N = 1, 2 over F_2 and F_3."""
        for field in (F2, F3):
            for N in (1, 2):
                for c in field.nonzero_elements():
                    lhs, rhs = tau_identity(field, N, c)
                    self.assertEqual(lhs, rhs)

    def test_negative_n(self):
        """Test both sides for N = -1 over F_3."""
        for c in F3.nonzero_elements():
            lhs, rhs = tau_identity(F3, -1, c)
            self.assertEqual(lhs, rhs)
