"""Tests for Riemann-Roch spaces, residues and principal parts."""
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
from hypshtuka.divisor import closed_point
from hypshtuka.errors import InputError
from hypshtuka.errors import PoleOnConductor
from hypshtuka.fields import field_make
from hypshtuka.func import RatFunc
from hypshtuka.model.point import INFINITY
from hypshtuka.model.point import Finite
from hypshtuka.poly import Poly
from hypshtuka.rr import Differential
from hypshtuka.rr import PrincipalPart
from hypshtuka.rr import omega_basis
from hypshtuka.rr import pairing_is_perfect
from hypshtuka.rr import principal_part_of
from hypshtuka.rr import residue
from hypshtuka.rr import residue_sum
from hypshtuka.rr import rr_basis

F3 = field_make(3)


class TestRiemannRoch(unittest.TestCase):
    """Tests for rr_basis and omega_basis."""

    def setUp(self):
        self.t = RatFunc.t(F3)

    def test_basis_at_infinity(self):
        """Test L(2[inf]) = <1, t, t^2>."""
        basis = rr_basis(Divisor.infinity(2), F3)
        self.assertEqual([RatFunc.one(F3), self.t, self.t**2], basis)

    def test_basis_with_finite_pole(self):
        """Test L([inf] + [0]) = <1/t, 1, t>."""
        basis = rr_basis(Divisor.infinity() + Divisor.at(F3.zero))
        self.assertEqual([1 / self.t, RatFunc.one(F3), self.t], basis)

    def test_basis_with_zero(self):
        """Test L(3[inf] - [1]) = <t - 1, t(t - 1), t^2(t - 1)>."""
        E = Divisor.infinity(3) - Divisor.at(F3.one)
        basis = rr_basis(E)
        self.assertEqual(3, len(basis))
        self.assertEqual(self.t - 1, basis[0])

    def test_negative_degree(self):
        """Test that L(E) is zero for deg E < 0."""
        self.assertEqual([], rr_basis(-Divisor.at(F3.one)))

    def test_field_required(self):
        """Test that a divisor supported at infinity needs a field."""
        with self.assertRaises(InputError):
            rr_basis(Divisor.infinity(2))

    def test_omega_basis(self):
        """Test differentials with (w) >= -3[inf]."""
        basis = omega_basis(-Divisor.infinity(3), F3)
        self.assertEqual(
            [Differential.dt(F3), Differential(self.t)], basis
        )

    def test_omega_basis_empty(self):
        """Test that there are no differentials with (w) >= 0."""
        self.assertEqual([], omega_basis(Divisor.zero(), F3))

    def test_differential_divisor(self):
        """Test (dt) = -2[inf]."""
        self.assertEqual(
            -Divisor.infinity(2), Differential.dt(F3).divisor()
        )
        self.assertEqual("dt", Differential.dt(F3).format())
        self.assertEqual("(t+1)*dt", Differential(self.t + 1).format())


class TestResidue(unittest.TestCase):
    """Tests for residues."""

    def setUp(self):
        self.t = RatFunc.t(F3)
        self.point = closed_point(Poly.from_ints(F3, [1, 0, 1]))

    def test_residue_rational_points(self):
        """Test dt/t has residue 1 at 0 and -1 at infinity."""
        omega = Differential(1 / self.t)
        self.assertEqual(F3.one, residue(omega, Finite(F3.zero)))
        self.assertEqual(F3.from_int(-1), residue(omega, INFINITY))
        self.assertEqual(F3.zero, residue(omega, Finite(F3.one)))

    def test_residue_double_pole(self):
        """Test dt/t^2 has no residue at 0."""
        omega = Differential(1 / self.t**2)
        self.assertEqual(F3.zero, residue(omega, Finite(F3.zero)))

    def test_traced_residue_closed_point(self):
        """Test traced residues at the point t^2 + 1."""
        f = self.t / (self.t**2 + 1)
        self.assertEqual(F3.one, residue(Differential(f), self.point))
        g = 1 / (self.t**2 + 1)
        self.assertEqual(F3.zero, residue(Differential(g), self.point))

    def test_untraced_residue_closed_point(self):
        """Test the residue class of t dt/(t^2 + 1) is 1/2."""
        f = self.t / (self.t**2 + 1)
        value = residue(Differential(f), self.point, trace=False)
        self.assertEqual(Poly.from_ints(F3, [2]), value)

    def test_residue_sum(self):
        """Test the residue theorem."""
        t = self.t
        for f in (1 / t, t / (t**2 + 1), (t + 1) / ((t - 1) ** 2 * t)):
            self.assertEqual(F3.zero, residue_sum(Differential(f)))

    def test_pairing_is_perfect(self):
        """Test that the residue pairing is perfect."""
        D = Divisor.infinity(2) + Divisor.at(F3.zero)
        self.assertTrue(pairing_is_perfect(D, F3))
        D = Divisor.infinity() + Divisor.point(self.point, 2)
        self.assertTrue(pairing_is_perfect(D, F3))


class TestPrincipalPart(unittest.TestCase):
    """Tests for PrincipalPart."""

    def setUp(self):
        self.t = RatFunc.t(F3)
        self.D = Divisor.infinity() + Divisor.at(F3.zero)

    def test_principal_part_and_lift(self):
        """Test that t + 1/t is its own canonical lifting."""
        f = self.t + 1 / self.t
        alpha = principal_part_of(f, self.D)
        self.assertEqual([F3.one, F3.one], alpha.coordinates())
        self.assertEqual(f, alpha.lift())

    def test_constant_has_no_principal_part(self):
        """Test that regular functions have zero principal part."""
        alpha = principal_part_of(RatFunc.constant(F3, 2), self.D)
        self.assertTrue(alpha.is_zero())

    def test_pole_exceeds_conductor(self):
        """Test that a double pole at infinity exceeds [inf]."""
        with self.assertRaises(PoleOnConductor):
            principal_part_of(self.t**2, self.D)

    def test_from_coordinates(self):
        """Test building from coordinates."""
        alpha = PrincipalPart.from_coordinates(self.D, F3, [2, 1])
        self.assertEqual(
            principal_part_of(2 * self.t + 1 / self.t, self.D), alpha
        )

    def test_basis(self):
        """Test the standard basis has deg D elements."""
        basis = PrincipalPart.basis(self.D, F3)
        self.assertEqual(2, len(basis))
        self.assertEqual(self.t, basis[0].lift())
        self.assertEqual(1 / self.t, basis[1].lift())

    def test_arithmetic(self):
        """Test sums and scaling."""
        a, b = PrincipalPart.basis(self.D, F3)
        total = a.scale(2) + b
        self.assertEqual([F3.from_int(2), F3.one], total.coordinates())
        self.assertTrue((a - a).is_zero())

    def test_different_conductors(self):
        """Test that parts along different conductors do not add."""
        a = PrincipalPart.zero(self.D, F3)
        b = PrincipalPart.zero(Divisor.infinity(), F3)
        with self.assertRaises(InputError):
            a + b
