"""Restriction to a conductor and generalized divisor classes."""
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
from typing import Dict
from typing import Optional

from hypshtuka import logger_factory
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import Point
from hypshtuka.divisor import point_polynomial
from hypshtuka.divisor import supported_away
from hypshtuka.errors import InputError
from hypshtuka.errors import PoleOnConductor
from hypshtuka.errors import SupportMeetsConductor
from hypshtuka.errors import ZeroConductor
from hypshtuka.func import RatFunc
from hypshtuka.func import rf_from_divisor
from hypshtuka.model.point import Infinity
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)


class ODElement:
    """
    Element of H^0(O_D), one component per point of D.

    The component at a finite point x of multiplicity n is a class in
    F[t]/(pi_x^n); at infinity it is a power series in s = 1/t modulo
    s^n.

    :ivar D: Effective divisor
    :vartype D: Divisor
    :ivar field: Coefficient field
    :vartype field: FieldDesc or KField
    :ivar components: Polynomial per point of the support of D
    :vartype components: dict
    """

    __slots__ = ("D", "field", "components")

    def __init__(
        self, D: Divisor, field: Any, components: Dict[Point, Poly]
    ) -> None:
        self.D = D
        self.field = field
        self.components = components

    @classmethod
    def constant(cls, D: Divisor, field: Any, c: Any) -> "ODElement":
        value = Poly.constant(field, c)
        return cls(D, field, {point: value for point in D.support})

    def _modulus(self, point: Point, k: int) -> Optional[Poly]:
        factor = point_polynomial(point, self.field)
        return None if factor is None else factor**k

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ODElement):
            return NotImplemented
        return self.D == other.D and self.components == other.components

    def __mul__(self, other: "ODElement") -> "ODElement":
        components = {}
        for point, k in self.D.items():
            product = self.components[point] * other.components[point]
            modulus = self._modulus(point, k)
            if modulus is None:
                components[point] = product.truncate(k)
            else:
                components[point] = product % modulus
        return ODElement(self.D, self.field, components)

    def is_unit(self) -> bool:
        """Unit iff every component has nonzero value at its point."""
        for point, k in self.D.items():
            value = self.components[point]
            modulus = self._modulus(point, 1)
            if modulus is None:
                if value.coefficient(0) == self.field.zero:
                    return False
            elif (value % modulus).is_zero():
                return False
        return True

    def scalar_value(self) -> Optional[Any]:
        """
        Common constant c when every component is the image of c.

        H^0(O_0) is the zero ring, so over D = 0 the value is one.

        :returns: c, or None when the element is not a scalar
        :rtype: Any
        """
        if not self.components:
            return self.field.one
        anchor = self.components[self.D.support[0]]
        if anchor.degree > 0:
            return None
        for value in self.components.values():
            if value != anchor:
                return None
        return anchor.coefficient(0)

    def is_one(self) -> bool:
        return self.scalar_value() == self.field.one

    def format(self) -> str:
        parts = []
        for point, value in self.components.items():
            var = "s" if isinstance(point, Infinity) else "t"
            parts.append(f"{point.format()}:{value.format(var)}")
        return "(" + ", ".join(parts) + ")"

    def __repr__(self) -> str:
        return f"ODElement{self.format()}"


def _series_at_infinity(f: RatFunc, n: int) -> Poly:
    if f.is_zero():
        return Poly.zero(f.field)
    top, bottom = f.fraction()
    shift = bottom.degree - top.degree
    if shift < 0:
        raise PoleOnConductor(f"{f.format()} has a pole at infinity")
    if shift >= n:
        return Poly.zero(f.field)
    series = top.reverse(top.degree) * bottom.reverse(
        bottom.degree
    ).series_inverse(n - shift)
    return series.truncate(n - shift).shift(shift)


def restrict_to_D(f: RatFunc, D: Divisor) -> ODElement:
    """
    Image of f in H^0(O_D).

    :param f: Function regular along D
    :type f: RatFunc
    :param D: Effective divisor
    :type D: Divisor
    :returns: restriction f|_D
    :rtype: ODElement
    :raises PoleOnConductor: When f has a pole on the support of D
    """
    components = {}
    for point, k in D.items():
        if isinstance(point, Infinity):
            components[point] = _series_at_infinity(f, k)
            continue
        pi = point_polynomial(point, f.field)
        top, bottom = f.cancel_at(pi)
        if bottom.valuation_at(pi) > 0:
            raise PoleOnConductor(
                f"{f.format()} has a pole at {point.format()}"
            )
        modulus = pi**k
        components[point] = (top * bottom.inverse_mod(modulus)) % modulus
    return ODElement(D, f.field, components)


def is_one_mod_D(f: RatFunc, D: Divisor) -> bool:
    """
    Tell whether f is regular along D and restricts to one.

    :param f: Rational function
    :type f: RatFunc
    :param D: Effective divisor
    :type D: Divisor
    :returns: f|_D == 1
    :rtype: bool
    """
    if f.is_zero():
        return False
    try:
        return restrict_to_D(f, D).is_one()
    except PoleOnConductor:
        return False


def check_conductor(D: Divisor) -> None:
    """
    Reject conductors that are zero or not effective.

    :raises ZeroConductor: When D is zero or has a negative multiplicity
    """
    if D.is_zero() or not D.is_effective():
        raise ZeroConductor(
            f"Conductor must be nonzero effective, got {D.format()}"
        )


def equivalent_mod_D(
    E1: Divisor, E2: Divisor, D: Divisor, field: Any = None
) -> Optional[RatFunc]:
    """
    Witness f with (f) = E1 - E2 and f|_D == 1, when one exists.

    :param E1: Divisor supported away from D
    :type E1: Divisor
    :param E2: Divisor supported away from D
    :type E2: Divisor
    :param D: Conductor
    :type D: Divisor
    :param field: Coefficient field of the witness, inferred when omitted
    :type field: FieldDesc or KField or None
    :returns: the normalized witness, None when E1 and E2 are not
        equivalent modulo D
    :rtype: RatFunc or None
    :raises SupportMeetsConductor: When E1 or E2 meets D
    """
    check_conductor(D)
    if not supported_away(E1, D) or not supported_away(E2, D):
        raise SupportMeetsConductor(
            f"{E1.format()} or {E2.format()} meets {D.format()}"
        )
    difference = E1 - E2
    if difference.degree != 0:
        return None
    if field is None:
        field = difference.coefficient_field(D.coefficient_field())
    if field is None:
        raise InputError("Coefficient field required")
    f0 = rf_from_divisor(difference, field)
    c = restrict_to_D(f0, D).scalar_value()
    if c is None:
        logger.debug(
            f"{E1.format()} and {E2.format()} differ modulo {D.format()}"
        )
        return None
    return f0 * (field.one / c)
