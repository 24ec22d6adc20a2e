"""Tests for factorization over finite fields."""
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
from hypothesis.strategies import composite
from hypothesis.strategies import integers
from hypothesis.strategies import lists
from hypothesis.strategies import sampled_from
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor
from sympy.polys.galoistools import gf_irreducible_p

sys.path.append("..")  # noqa

from hypshtuka.errors import InputError
from hypshtuka.factor import is_irreducible
from hypshtuka.factor import poly_factor_fq
from hypshtuka.factor import poly_roots
from hypshtuka.factor import square_free_decomposition
from hypshtuka.fields import field_make
from hypshtuka.poly import Poly

F2 = field_make(2)
F4 = field_make(2, 2)
F5 = field_make(5)


def _p(field, *values):
    return Poly.from_ints(field, values)


@composite
def prime_field_polys(draw):
    p = draw(sampled_from([2, 3, 5, 7]))
    values = draw(lists(integers(0, p - 1), min_size=1, max_size=7))
    values.append(draw(integers(1, p - 1)))
    return p, values


def _dense(poly):
    return tuple(c.value for c in reversed(poly.coeffs))


class TestFactor(unittest.TestCase):
    """Tests for polynomial factorization."""

    def test_factor_mixed_degrees(self):
        """Test factoring (t + 1)(t - 1)^2(t^2 + 2) over F_5."""
        g = _p(F5, 1, 1) * _p(F5, 4, 1) ** 2 * _p(F5, 2, 0, 1)
        expected = [
            (_p(F5, 1, 1), 1),
            (_p(F5, 4, 1), 2),
            (_p(F5, 2, 0, 1), 1),
        ]
        self.assertEqual(expected, poly_factor_fq(g))

    def test_factor_drops_leading_coefficient(self):
        """Test that factors are monic."""
        self.assertEqual([(_p(F5, 1, 1), 1)], poly_factor_fq(_p(F5, 2, 2)))

    def test_factor_pth_power(self):
        """Test t^5 - 1 = (t - 1)^5."""
        self.assertEqual(
            [(_p(F5, 4, 1), 5)], poly_factor_fq(_p(F5, 4, 0, 0, 0, 0, 1))
        )

    def test_factor_zero(self):
        """Test that zero cannot be factored."""
        with self.assertRaises(InputError):
            poly_factor_fq(Poly.zero(F5))

    def test_factor_product_matches(self):
        """Test that the factors multiply back in characteristic 2."""
        g = _p(F2, 1, 1, 0, 0, 1) * _p(F2, 1, 1, 1) ** 2 * _p(F2, 0, 1)
        product = Poly.one(F2)
        for factor, k in poly_factor_fq(g):
            self.assertTrue(is_irreducible(factor))
            product = product * factor**k
        self.assertEqual(g, product)

    def test_square_free_decomposition(self):
        """Test multiplicities of square-free parts."""
        g = _p(F5, 1, 1) * _p(F5, 4, 1) ** 2
        self.assertEqual(
            [(_p(F5, 1, 1), 1), (_p(F5, 4, 1), 2)],
            square_free_decomposition(g),
        )

    def test_is_irreducible(self):
        """Test Rabin's test on small cases."""
        self.assertTrue(is_irreducible(_p(F5, 2, 0, 1)))
        self.assertFalse(is_irreducible(_p(F5, 1, 0, 1)))
        self.assertTrue(is_irreducible(_p(F2, 1, 1, 0, 0, 1)))
        self.assertFalse(is_irreducible(_p(F2, 1, 0, 1, 0, 1)))
        self.assertTrue(is_irreducible(_p(F5, 3, 1)))
        self.assertFalse(is_irreducible(_p(F5, 3)))

    def test_roots_over_extension(self):
        """Test that t^2 + t + 1 splits over F_4."""
        roots = poly_roots(_p(F4, 1, 1, 1))
        self.assertEqual([F4.gen, F4.gen + 1], roots)

    def test_roots_none(self):
        """Test an irreducible quadratic has no roots."""
        self.assertEqual([], poly_roots(_p(F5, 2, 0, 1)))


class TestAgainstGaloisTools(unittest.TestCase):
    """Comparisons with sympy over prime fields."""

    @settings(max_examples=60, deadline=None)
    @given(prime_field_polys())
    def test_factorization(self, case):
        """Test that the factors and multiplicities match gf_factor."""
        p, values = case
        g = Poly.from_ints(field_make(p), values)
        _, expected = gf_factor(list(reversed(values)), p, ZZ)
        self.assertEqual(
            sorted((tuple(int(c) for c in f), k) for f, k in expected),
            sorted((_dense(f), k) for f, k in poly_factor_fq(g)),
        )

    @settings(max_examples=60, deadline=None)
    @given(prime_field_polys())
    def test_irreducibility(self, case):
        """Test that the irreducibility test matches gf_irreducible_p."""
        p, values = case
        g = Poly.from_ints(field_make(p), values)
        self.assertEqual(
            gf_irreducible_p(list(reversed(values)), p, ZZ),
            is_irreducible(g),
        )
