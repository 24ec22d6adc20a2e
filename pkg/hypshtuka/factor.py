"""Factorization of polynomials over finite fields."""
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
import random
from typing import List
from typing import Tuple

from sympy import factorint

from hypshtuka import logger_factory
from hypshtuka.errors import InputError
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import FieldElem
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)

Factorization = List[Tuple[Poly, int]]


def _pth_root(f: Poly) -> Poly:
    field: FieldDesc = f.field
    p = field.p
    return Poly(
        field,
        [field.frob_p(f.coeffs[i], -1) for i in range(0, len(f.coeffs), p)],
    )


def square_free_decomposition(f: Poly) -> Factorization:
    """
    Split a monic polynomial into square-free parts with multiplicities.

    :param f: Monic polynomial over a finite field
    :type f: Poly
    :returns: pairs (g, i) with f = prod g^i and every g square-free
    :rtype: list
    """
    if f.degree < 1:
        return []
    p = f.field.p
    result: Factorization = []
    derivative = f.derivative()
    if derivative.is_zero():
        return [(g, k * p) for g, k in square_free_decomposition(_pth_root(f))]
    c = f.gcd(derivative)
    w = f // c
    i = 1
    while not w.is_one():
        y = w.gcd(c)
        factor = w // y
        if not factor.is_one():
            result.append((factor, i))
        w = y
        c = c // y
        i += 1
    if not c.is_one():
        result.extend(
            (g, k * p) for g, k in square_free_decomposition(_pth_root(c))
        )
    return result


def distinct_degree_factorization(f: Poly) -> List[Tuple[Poly, int]]:
    """
    Group the irreducible factors of a square-free monic f by degree.

    :param f: Square-free monic polynomial
    :type f: Poly
    :returns: pairs (g, d), g the product of all degree d factors
    :rtype: list
    """
    field: FieldDesc = f.field
    x = Poly.monomial(field, 1)
    result = []
    remaining = f
    h = x % remaining
    d = 1
    while remaining.degree >= 2 * d:
        h = h.powmod(field.order, remaining)
        g = remaining.gcd(h - x)
        if not g.is_one():
            result.append((g, d))
            remaining = remaining // g
            h = h % remaining
        d += 1
    if remaining.degree > 0:
        result.append((remaining, remaining.degree))
    return result


def _random_poly(field: FieldDesc, degree: int, rng: random.Random) -> Poly:
    return Poly(
        field,
        [FieldElem(field, rng.randrange(field.order)) for _ in range(degree)],
    )


def _splitting_candidate(
    a: Poly, f: Poly, d: int, field: FieldDesc
) -> Poly:
    if field.p != 2:
        exponent = (field.order**d - 1) // 2
        return a.powmod(exponent, f) - Poly.one(field)
    trace = a % f
    term = trace
    for _ in range(field.m * d - 1):
        term = (term * term) % f
        trace = trace + term
    return trace


def equal_degree_factorization(
    f: Poly, d: int, rng: random.Random
) -> List[Poly]:
    """
    Cantor-Zassenhaus splitting of a product of degree d irreducibles.

    :param f: Square-free monic product of irreducibles of degree d
    :type f: Poly
    :param d: Common degree of the factors
    :type d: int
    :param rng: Source of random splitting polynomials
    :type rng: random.Random
    :returns: the irreducible factors
    :rtype: list
    """
    if f.degree == d:
        return [f]
    field: FieldDesc = f.field
    while True:
        a = _random_poly(field, f.degree, rng)
        if a.degree < 1:
            continue
        g = f.gcd(_splitting_candidate(a, f, d, field))
        if 0 < g.degree < f.degree:
            return equal_degree_factorization(
                g, d, rng
            ) + equal_degree_factorization(f // g, d, rng)


def poly_factor_fq(g: Poly, seed: int = 0) -> Factorization:
    """
    Factor a nonzero polynomial over a finite field.

    The product of the returned factors raised to their multiplicities,
    times the leading coefficient of g, is g.

    :param g: Nonzero polynomial over a FieldDesc
    :type g: Poly
    :param seed: Seed of the equal degree splitting
    :type seed: int
    :returns: pairs (monic irreducible, multiplicity) sorted by degree and
        coefficients
    :rtype: list
    :raises InputError: When g is zero
    """
    if g.is_zero():
        raise InputError("Cannot factor the zero polynomial")
    rng = random.Random(seed)
    collected = {}
    for part, multiplicity in square_free_decomposition(g.monic()):
        for block, d in distinct_degree_factorization(part):
            for factor in equal_degree_factorization(block, d, rng):
                collected[factor] = collected.get(factor, 0) + multiplicity
    result = sorted(collected.items(), key=lambda item: item[0].sort_key())
    logger.debug(f"Factored degree {g.degree} into {len(result)} factors")
    return result


def is_irreducible(f: Poly) -> bool:
    """
    Rabin irreducibility test over a finite field.

    :param f: Polynomial over a FieldDesc
    :type f: Poly
    :returns: True when f has degree at least one and no proper factor
    :rtype: bool
    """
    n = f.degree
    if n < 1:
        return False
    f = f.monic()
    field: FieldDesc = f.field
    x = Poly.monomial(field, 1)
    for r in factorint(n):
        h = x
        for _ in range(n // r):
            h = h.powmod(field.order, f)
        if not f.gcd(h - x).is_one():
            return False
    h = x
    for _ in range(n):
        h = h.powmod(field.order, f)
    return (h - x) % f == Poly.zero(field)


def poly_roots(f: Poly) -> List[FieldElem]:
    """Roots of f in its coefficient field, ascending by packed value."""
    roots = [
        -factor.coefficient(0)
        for factor, _ in poly_factor_fq(f)
        if factor.degree == 1
    ]
    return sorted(roots, key=lambda r: r.value)
