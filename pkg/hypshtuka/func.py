"""Rational functions in t with coefficients in K."""
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
from typing import Any
from typing import Iterator
from typing import List
from typing import Optional
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import common_field
from hypshtuka.divisor import div_twist
from hypshtuka.divisor import point_polynomial
from hypshtuka.errors import FieldMismatch
from hypshtuka.errors import InputError
from hypshtuka.errors import NoRoot
from hypshtuka.errors import NonzeroDegree
from hypshtuka.errors import PoleAtPoint
from hypshtuka.errors import Unfactorable
from hypshtuka.factor import poly_factor_fq
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import FieldElem
from hypshtuka.fields import KField
from hypshtuka.model.point import Closed
from hypshtuka.model.point import Finite
from hypshtuka.model.point import Infinity
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)


class RatFunc:
    """
    Fraction num/den of polynomials in t with monic denominator.

    Construction only makes the denominator monic; the common factor
    is cancelled the first time ``num`` or ``den`` is read. Arithmetic,
    evaluation and local expansions work on the stored fraction.

    A function built from a divisor keeps that divisor; products,
    quotients, powers and twists carry it along, sums drop it.

    :ivar field: Coefficient field
    :vartype field: FieldDesc or KField
    :ivar divisor: Retained divisor, None when unknown
    :vartype divisor: Divisor or None
    """

    __slots__ = ("field", "_num", "_den", "divisor", "_reduced")

    def __init__(
        self,
        field: Any,
        num: Poly,
        den: Poly,
        divisor: Optional[Divisor] = None,
        reduced: bool = True,
    ) -> None:
        self.field = field
        self._num = num
        self._den = den
        self.divisor = divisor
        self._reduced = reduced

    @classmethod
    def make(
        cls,
        num: Poly,
        den: Optional[Poly] = None,
        divisor: Optional[Divisor] = None,
    ) -> "RatFunc":
        """
        Fraction num/den with monic denominator, reduced on first read.

        :param num: Numerator
        :type num: Poly
        :param den: Denominator, one if omitted
        :type den: Poly or None
        :param divisor: Known divisor of the function
        :type divisor: Divisor or None
        :returns: the function
        :rtype: RatFunc
        """
        field = num.field
        if den is None:
            den = Poly.one(field)
        if den.is_zero():
            raise ZeroDivisionError("Zero denominator")
        if num.is_zero():
            return cls(field, num, Poly.one(field))
        lead = den.leading
        if lead != field.one:
            inverse = field.one / lead
            num, den = num.scale(inverse), den.scale(inverse)
        if den.degree == 0:
            return cls(field, num, den, divisor)
        low = min(_low_degree(num), _low_degree(den))
        if low:
            num = Poly(field, num.coeffs[low:])
            den = Poly(field, den.coeffs[low:])
        return cls(field, num, den, divisor, den.degree == 0)

    def _reduce(self) -> None:
        if self._reduced:
            return
        g = self._num.gcd(self._den)
        if not g.is_one():
            self._num = self._num // g
            self._den = self._den // g
        self._reduced = True

    @property
    def num(self) -> Poly:
        """Numerator, coprime to the denominator."""
        self._reduce()
        return self._num

    @property
    def den(self) -> Poly:
        """Monic denominator, coprime to the numerator."""
        self._reduce()
        return self._den

    def fraction(self) -> Tuple[Poly, Poly]:
        """Stored numerator and monic denominator, possibly not coprime."""
        return self._num, self._den

    def cancel_at(self, pi: Poly) -> Tuple[Poly, Poly]:
        """
        Stored fraction with the common powers of pi removed.

        :param pi: Monic irreducible polynomial
        :type pi: Poly
        :returns: (num, den) where pi divides at most one of them
        :rtype: tuple
        """
        num, den = self._num, self._den
        if self._reduced:
            return num, den
        k = den.valuation_at(pi)
        if k:
            k = min(k, num.valuation_at(pi))
        if k:
            power = pi**k
            num, den = num // power, den // power
        return num, den

    @classmethod
    def t(cls, field: Any) -> "RatFunc":
        return cls(
            field,
            Poly.monomial(field, 1),
            Poly.one(field),
            Divisor.at(field.zero) - Divisor.infinity(),
        )

    @classmethod
    def constant(cls, field: Any, value: Any) -> "RatFunc":
        c = field.coerce(value)
        divisor = None if c == field.zero else Divisor.zero()
        return cls(field, Poly(field, (c,)), Poly.one(field), divisor)

    @classmethod
    def one(cls, field: Any) -> "RatFunc":
        return cls.constant(field, 1)

    @classmethod
    def zero(cls, field: Any) -> "RatFunc":
        return cls(field, Poly.zero(field), Poly.one(field))

    @classmethod
    def from_poly(cls, poly: Poly) -> "RatFunc":
        return cls(poly.field, poly, Poly.one(poly.field))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        a, b = _align(self, other)
        if a._reduced and b._reduced:
            return a._num == b._num and a._den == b._den
        return a._num * b._den == b._num * a._den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        if _is_scalar(self):
            return True
        return self.num.degree <= 0 and self.den.degree == 0

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self._den.degree == 0 or self.den.degree == 0

    @property
    def ord_infinity(self) -> int:
        """Order of vanishing at infinity, deg den - deg num."""
        return self._den.degree - self._num.degree

    def coefficients(self) -> Iterator[Any]:
        yield from self.num.coeffs
        yield from self.den.coeffs

    def is_base_rational(self) -> bool:
        """True when every coefficient lies in F_q."""
        return all(self.field.is_base_rational(c) for c in self.coefficients())

    def change_field(self, field: Any) -> "RatFunc":
        if field is self.field or field == self.field:
            return self
        divisor = None if self.divisor is None else self.divisor.over(field)
        return RatFunc(
            field,
            self._num.change_field(field),
            self._den.change_field(field),
            divisor,
            self._reduced,
        )

    def _lift(self, other: Any) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        try:
            return RatFunc.constant(self.field, other)
        except FieldMismatch:
            return RatFunc.constant(other.field, other)

    def __add__(self, other: Any) -> "RatFunc":
        a, b = _align(self, self._lift(other))
        if a._den == b._den:
            return RatFunc.make(a._num + b._num, a._den)
        return RatFunc.make(
            a._num * b._den + b._num * a._den, a._den * b._den
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(
            self.field, -self._num, self._den, self.divisor, self._reduced
        )

    def __sub__(self, other: Any) -> "RatFunc":
        return self + (-self._lift(other))

    def __rsub__(self, other: Any) -> "RatFunc":
        return self._lift(other) - self

    def __mul__(self, other: Any) -> "RatFunc":
        a, b = _align(self, self._lift(other))
        divisor = _combine(a, b, 1)
        if _is_scalar(a) or _is_scalar(b):
            c, f = (a, b) if _is_scalar(a) else (b, a)
            scalar = c._num.coefficient(0)
            if scalar == a.field.zero:
                return RatFunc.zero(a.field)
            return RatFunc(
                a.field, f._num.scale(scalar), f._den, divisor, f._reduced
            )
        return RatFunc.make(a._num * b._num, a._den * b._den, divisor)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of the zero function")
        divisor = None if self.divisor is None else -self.divisor
        return RatFunc.make(self._den, self._num, divisor)

    def __truediv__(self, other: Any) -> "RatFunc":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other: Any) -> "RatFunc":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        divisor = None if self.divisor is None else k * self.divisor
        return RatFunc(
            self.field, self._num**k, self._den**k, divisor, self._reduced
        )

    def scale(self, c: Any) -> "RatFunc":
        return self * c

    def format(self, var: str = "t") -> str:
        """Canonical text, e.g. ``(t+1)/t^2``."""
        num = self.num.format(var)
        if self.den.is_one():
            return num
        den = self.den.format(var)
        if not _is_atomic(num):
            num = f"({num})"
        if not _is_atomic(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"RatFunc({self.format()})"

    def __call__(self, x: Any) -> Any:
        return rf_eval(self, x)

    def twist(self, n: int) -> "RatFunc":
        return rf_twist(self, n)


def _is_atomic(text: str) -> bool:
    return all(ch.isalnum() or ch in "^_" for ch in text)


def _align(a: RatFunc, b: RatFunc) -> Tuple[RatFunc, RatFunc]:
    if a.field is b.field or a.field == b.field:
        return a, b
    field = common_field([a.field, b.field])
    return a.change_field(field), b.change_field(field)


def _is_scalar(f: RatFunc) -> bool:
    return f._den.degree == 0 and f._num.degree <= 0


def _low_degree(poly: Poly) -> int:
    zero = poly.field.zero
    return next(i for i, c in enumerate(poly.coeffs) if c != zero)


def _known_divisor(f: RatFunc) -> Optional[Divisor]:
    if f.divisor is not None:
        return f.divisor
    if _is_scalar(f) and not f.is_zero():
        return Divisor.zero()
    return None


def _combine(a: RatFunc, b: RatFunc, sign: int) -> Optional[Divisor]:
    da, db = _known_divisor(a), _known_divisor(b)
    if da is None or db is None:
        return None
    return da + sign * db


def rf_eval(f: RatFunc, x: Any) -> Any:
    """
    Value of f at a point.

    :param f: Rational function
    :type f: RatFunc
    :param x: Element of a field compatible with f, a Finite point or
        Infinity
    :type x: Any
    :returns: exact value
    :rtype: FieldElem or KElem
    :raises PoleAtPoint: When x is a pole of f
    """
    num, den = f.fraction()
    if isinstance(x, Infinity):
        if num.degree > den.degree:
            raise PoleAtPoint(f"{f.format()} has a pole at infinity")
        if num.degree < den.degree:
            return f.field.zero
        return num.leading / den.leading
    if isinstance(x, Finite):
        x = x.x
    if isinstance(x, int):
        x = f.field.coerce(x)
    field = common_field([f.field, x.field])
    x = field.coerce(x)
    d = den.evaluate_in(field, x)
    if d == field.zero:
        num, den = f.num, f.den
        d = den.evaluate_in(field, x)
    if d == field.zero:
        raise PoleAtPoint(f"{f.format()} has a pole at {x.format()}")
    return num.evaluate_in(field, x) / d


def rf_twist(f: RatFunc, n: int) -> RatFunc:
    """
    Twist the coefficients of f by the n-th power of Frobenius.

    :param f: Rational function
    :type f: RatFunc
    :param n: Twist exponent
    :type n: int
    :returns: f^(n), t is fixed
    :rtype: RatFunc
    :raises NoRoot: When a negative twist has no root
    """
    if n == 0:
        return f
    field = f.field

    def twist(c: Any) -> Any:
        return field.frobenius(c, n)

    divisor = None
    if f.divisor is not None:
        try:
            divisor = div_twist(f.divisor, n, field.base.order)
        except NoRoot:
            divisor = None
    num, den = f.fraction()
    try:
        num, den = num.map_coefficients(twist), den.map_coefficients(twist)
    except NoRoot:
        if f._reduced:
            raise
        num = f.num.map_coefficients(twist)
        den = f.den.map_coefficients(twist)
    return RatFunc(field, num, den, divisor, f._reduced)


def rf_from_divisor(E: Divisor, field: Any = None) -> RatFunc:
    """
    Function with divisor E, numerator and denominator monic.

    :param E: Divisor of degree zero
    :type E: Divisor
    :param field: Coefficient field, inferred from E when omitted
    :type field: FieldDesc or KField or None
    :returns: function retaining E as its divisor
    :rtype: RatFunc
    :raises NonzeroDegree: When deg E is not zero
    """
    if E.degree != 0:
        raise NonzeroDegree(f"Divisor {E.format()} has degree {E.degree}")
    field = E.coefficient_field(field) if field is None else field
    if field is None:
        raise InputError("Coefficient field required for the zero divisor")
    num = Poly.one(field)
    den = Poly.one(field)
    for point, k in E.items():
        factor = point_polynomial(point, field)
        if factor is None:
            continue
        if k > 0:
            num = num * factor**k
        else:
            den = den * factor ** (-k)
    return RatFunc(field, num, den, E.over(field))


def _to_subfield(c: FieldElem, sub: FieldDesc) -> FieldElem:
    if c.desc == sub:
        return c
    for y in sub.elements():
        if c.desc.coerce(y) == c:
            return y
    raise Unfactorable(f"{c.format()} does not lie in {sub!r}")


def _divisor_of_poly(
    g: Poly, target: Any, base: FieldDesc, sign: int
) -> List[Tuple[Any, int]]:
    terms: List[Tuple[Any, int]] = []
    if g.degree < 1:
        return terms
    const: FieldDesc = g.field
    if all(const.contains(c, base) for c in g.coeffs):
        g = g.map_coefficients(lambda c: _to_subfield(c, base), base)
    for factor, k in poly_factor_fq(g):
        if factor.degree == 1:
            point = Finite(target.coerce(-factor.coefficient(0)))
        elif factor.field == base:
            point = Closed(factor)
        else:
            raise Unfactorable(
                f"{factor.format('t')} is not defined over {base!r}"
            )
        terms.append((point, sign * k))
    return terms


def divisor_of(f: RatFunc) -> Divisor:
    """
    Divisor of a nonzero rational function.

    :param f: Nonzero rational function
    :type f: RatFunc
    :returns: retained divisor or the one read off a factorization
    :rtype: Divisor
    :raises Unfactorable: When the coefficients depend on tau and no
        divisor was retained
    """
    if f.is_zero():
        raise InputError("The zero function has no divisor")
    if f.divisor is not None:
        return f.divisor
    field = f.field
    num, den = f.num, f.den
    if isinstance(field, KField):
        if not all(c.is_constant() for c in f.coefficients()):
            raise Unfactorable(f"{f.format()} depends on tau")
        num = num.map_coefficients(lambda c: c.constant_value(), field.const)
        den = den.map_coefficients(lambda c: c.constant_value(), field.const)
    terms = _divisor_of_poly(num, field, field.base, 1)
    terms += _divisor_of_poly(den, field, field.base, -1)
    terms.append((Infinity(), f.ord_infinity))
    divisor = Divisor(terms)
    logger.debug(f"Divisor of {f.format()} is {divisor.format()}")
    return divisor
