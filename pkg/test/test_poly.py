"""Tests for Poly."""
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

from hypothesis import given
from hypothesis import settings
from hypothesis.strategies import integers
from hypothesis.strategies import lists

sys.path.append("..")  # noqa

from hypshtuka.errors import ComputationError
from hypshtuka.fields import field_make
from hypshtuka.poly import Poly

F5 = field_make(5)
F7 = field_make(7)

coefficients = lists(integers(min_value=0, max_value=6), max_size=6)


def _p(*values):
    return Poly.from_ints(F5, values)


class TestPoly(unittest.TestCase):
    """Tests for polynomials over a finite field."""

    def test_trailing_zeros_trimmed(self):
        """Test that trailing zero coefficients are dropped."""
        self.assertEqual(1, _p(1, 2, 0, 0).degree)

    def test_zero_degree(self):
        """Test that the zero polynomial has degree -1."""
        self.assertEqual(-1, Poly.zero(F5).degree)
        self.assertTrue(_p(0, 0).is_zero())

    def test_format_descending(self):
        """Test canonical text with descending powers."""
        self.assertEqual("t^2+1", _p(1, 0, 1).format("t"))
        self.assertEqual("3*t+2", _p(2, 3).format("t"))
        self.assertEqual("0", Poly.zero(F5).format("t"))

    def test_linear(self):
        """Test x - root."""
        self.assertEqual(_p(3, 1), Poly.linear(F5, 2))

    def test_monomial(self):
        """Test value * x^degree."""
        self.assertEqual(_p(0, 0, 4), Poly.monomial(F5, 2, 4))

    def test_divmod(self):
        """Test division with remainder."""
        quotient, remainder = divmod(_p(2, 0, 1), _p(3, 1))
        self.assertEqual(_p(2, 1), quotient)
        self.assertEqual(_p(1), remainder)

    def test_divmod_by_zero(self):
        """Test division by the zero polynomial."""
        with self.assertRaises(ZeroDivisionError):
            divmod(_p(1, 1), Poly.zero(F5))

    def test_exquo_exact(self):
        """Test exact quotient of t^2 + 1 by t - 2."""
        self.assertEqual(_p(2, 1), _p(1, 0, 1).exquo(_p(3, 1)))

    def test_exquo_inexact(self):
        """Test that a nonzero remainder raises."""
        with self.assertRaises(ComputationError):
            _p(2, 0, 1).exquo(_p(3, 1))

    def test_gcd_monic(self):
        """Test that gcd is monic."""
        a = _p(3, 1) * _p(1, 1)
        b = _p(3, 1).scale(F5.from_int(2)) * _p(2, 1)
        self.assertEqual(_p(3, 1), a.gcd(b))

    def test_xgcd_identity(self):
        """Test the Bezout identity."""
        a, b = _p(1, 0, 1), _p(1, 1, 1)
        g, s, u = a.xgcd(b)
        self.assertEqual(g, s * a + u * b)
        self.assertTrue(g.is_monic())

    def test_inverse_mod(self):
        """Test inverse modulo an irreducible polynomial."""
        modulus = _p(2, 0, 1)
        a = _p(1, 1)
        self.assertTrue(((a * a.inverse_mod(modulus)) % modulus).is_one())

    def test_inverse_mod_not_coprime(self):
        """Test inverse of a polynomial sharing a factor."""
        with self.assertRaises(ComputationError):
            _p(3, 1).inverse_mod(_p(1, 0, 1))

    def test_powmod(self):
        """Test modular power against plain power."""
        modulus = _p(2, 0, 1)
        a = _p(1, 2)
        self.assertEqual((a**7) % modulus, a.powmod(7, modulus))

    def test_evaluate(self):
        """Test Horner evaluation."""
        self.assertEqual(F5.from_int(0), _p(1, 0, 1)(F5.from_int(2)))
        self.assertEqual(F5.from_int(2), _p(1, 0, 1)(F5.from_int(1)))

    def test_derivative_of_p_th_power(self):
        """Test that t^5 has zero derivative in characteristic 5."""
        self.assertTrue(Poly.monomial(F5, 5).derivative().is_zero())

    def test_twist_power(self):
        """Test that the q-th power twist equals the plain power."""
        a = _p(1, 1)
        self.assertEqual(a**5, a.twist_power(1))
        self.assertEqual(_p(1, 0, 0, 0, 0, 1), a.twist_power(1))

    def test_series_inverse(self):
        """Test that 1/(1 - t) is the geometric series."""
        self.assertEqual(_p(1, 1, 1, 1), _p(1, 4).series_inverse(4))

    def test_series_inverse_not_unit(self):
        """Test inverting a series without constant term."""
        with self.assertRaises(ZeroDivisionError):
            _p(0, 1).series_inverse(3)

    def test_reverse(self):
        """Test x^n * p(1/x)."""
        self.assertEqual(_p(0, 3, 2), _p(2, 3).reverse(2))

    def test_valuation_at(self):
        """Test multiplicity of a linear factor."""
        a = _p(4, 1) ** 3 * _p(1, 1)
        self.assertEqual(3, a.valuation_at(_p(4, 1)))
        self.assertEqual(0, a.valuation_at(_p(2, 1)))

    def test_negative_power(self):
        """Test that negative powers are rejected."""
        with self.assertRaises(ValueError):
            _p(1, 1) ** -1

    @settings(max_examples=50, deadline=None)
    @given(coefficients, coefficients)
    def test_divmod_identity(self, a, b):
        """Test a = quotient * b + remainder with deg remainder < deg b."""
        a = Poly.from_ints(F7, a)
        b = Poly.from_ints(F7, b)
        if b.is_zero():
            return
        quotient, remainder = divmod(a, b)
        self.assertEqual(a, quotient * b + remainder)
        self.assertLess(remainder.degree, b.degree)

    @settings(max_examples=50, deadline=None)
    @given(coefficients, coefficients, coefficients)
    def test_ring_identities(self, a, b, c):
        """Test commutativity and distributivity."""
        a = Poly.from_ints(F7, a)
        b = Poly.from_ints(F7, b)
        c = Poly.from_ints(F7, c)
        self.assertEqual(a * b, b * a)
        self.assertEqual(a * (b + c), a * b + a * c)
