"""Divisors on the projective line over K."""
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
from typing import Iterable
from typing import List
from typing import Mapping
from typing import Optional
from typing import Tuple
from typing import Union

from hypshtuka.errors import FieldMismatch
from hypshtuka.errors import FieldTooSmall
from hypshtuka.errors import ReducibleModulus
from hypshtuka.factor import is_irreducible
from hypshtuka.factor import poly_roots
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import KElem
from hypshtuka.fields import KField
from hypshtuka.fields import frobenius
from hypshtuka.model.point import INFINITY
from hypshtuka.model.point import Closed
from hypshtuka.model.point import Finite
from hypshtuka.model.point import Infinity
from hypshtuka.poly import Poly

Point = Union[Finite, Infinity, Closed]


def closed_point(poly: Poly) -> Point:
    """
    Point cut out by a monic irreducible polynomial over the base field.

    Linear polynomials give the rational point of their root.

    :param poly: Monic irreducible polynomial over a FieldDesc
    :type poly: Poly
    :returns: Finite or Closed point
    :rtype: Point
    :raises ReducibleModulus: When poly is not monic irreducible
    """
    if not isinstance(poly.field, FieldDesc):
        raise FieldMismatch("Closed points are defined over a finite field")
    if not poly.is_monic() or not is_irreducible(poly):
        raise ReducibleModulus(
            f"{poly.format('t')} is not monic irreducible over "
            f"{poly.field!r}"
        )
    if poly.degree == 1:
        return Finite(-poly.coefficient(0))
    return Closed(poly)


def common_field(fields: Iterable[Any]) -> Optional[Any]:
    """
    Smallest coefficient field among the given ones containing all others.

    :param fields: FieldDesc or KField instances
    :type fields: Iterable
    :returns: common field, None for no input
    :rtype: FieldDesc or KField or None
    :raises FieldMismatch: For incompatible fields
    """
    best = None
    for field in fields:
        if best is None or best == field:
            best = field
        elif isinstance(best, KField):
            if isinstance(field, KField):
                raise FieldMismatch(f"{best!r} and {field!r} do not mix")
            best.const.subfield_degree(field)
        elif isinstance(field, KField):
            field.const.subfield_degree(best)
            best = field
        elif field.m > best.m:
            field.subfield_degree(best)
            best = field
        else:
            best.subfield_degree(field)
    return best


def _field_of(point: Point) -> Optional[Any]:
    if isinstance(point, Finite):
        return point.x.field
    if isinstance(point, Closed):
        return point.poly.field
    return None


def points_meet(a: Point, b: Point) -> bool:
    """
    Tell whether two points of the support coincide.

    A Finite point meets a Closed point when its coordinate is a root of
    the closed point's polynomial.
    """
    if isinstance(a, Infinity) or isinstance(b, Infinity):
        return isinstance(a, Infinity) and isinstance(b, Infinity)
    if isinstance(a, Closed) and isinstance(b, Closed):
        return a == b
    if isinstance(a, Closed):
        a, b = b, a
    if isinstance(b, Closed):
        field = common_field([a.x.field, b.poly.field])
        x = field.coerce(a.x)
        return b.poly.evaluate_in(field, x) == field.zero
    field = common_field([a.x.field, b.x.field])
    return field.coerce(a.x) == field.coerce(b.x)


class Divisor:
    """
    Formal integer combination of points.

    Instances are immutable; arithmetic returns new divisors.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[Point, int], Iterable[Tuple[Point, int]]] = (),
    ) -> None:
        merged: Dict[Point, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for point, multiplicity in items:
            merged[point] = merged.get(point, 0) + multiplicity
        self._terms = {p: k for p, k in merged.items() if k != 0}

    @classmethod
    def zero(cls) -> "Divisor":
        return cls()

    @classmethod
    def point(cls, point: Point, multiplicity: int = 1) -> "Divisor":
        return cls({point: multiplicity})

    @classmethod
    def infinity(cls, multiplicity: int = 1) -> "Divisor":
        return cls({INFINITY: multiplicity})

    @classmethod
    def at(cls, x: Any, multiplicity: int = 1) -> "Divisor":
        """Multiple of the rational point t = x."""
        return cls({Finite(x): multiplicity})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def items(self) -> List[Tuple[Point, int]]:
        """Terms sorted by point."""
        return sorted(self._terms.items(), key=lambda i: i[0].sort_key())

    @property
    def support(self) -> List[Point]:
        return [p for p, _ in self.items()]

    def multiplicity(self, point: Point) -> int:
        return self._terms.get(point, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({p: -k for p, k in self._terms.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __mul__(self, k: int) -> "Divisor":
        return Divisor({p: k * m for p, m in self._terms.items()})

    __rmul__ = __mul__

    @property
    def degree(self) -> int:
        return sum(k * p.degree for p, k in self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        return all(k > 0 for k in self._terms.values())

    def positive_part(self) -> "Divisor":
        return Divisor({p: k for p, k in self._terms.items() if k > 0})

    def negative_part(self) -> "Divisor":
        """Effective divisor -min(E, 0)."""
        return Divisor({p: -k for p, k in self._terms.items() if k < 0})

    def coefficient_field(self, default: Any = None) -> Any:
        """Common field of the point coordinates, default when none."""
        field = common_field(
            f for f in (_field_of(p) for p in self._terms) if f is not None
        )
        return default if field is None else field

    def over(self, field: Any) -> "Divisor":
        """
        Same divisor with Finite coordinates coerced into field.

        :param field: FieldDesc or KField containing every coordinate
        :type field: FieldDesc or KField
        :returns: divisor over field
        :rtype: Divisor
        """
        terms = []
        for point, k in self._terms.items():
            if isinstance(point, Finite):
                point = Finite(field.coerce(point.x))
            terms.append((point, k))
        return Divisor(terms)

    def is_base_rational(self) -> bool:
        """True when every Finite coordinate lies in F_q."""
        for point in self._terms:
            if isinstance(point, Finite):
                if not point.x.field.is_base_rational(point.x):
                    return False
        return True

    def twist(self, n: int, q: Optional[int] = None) -> "Divisor":
        return div_twist(self, n, q)

    def format(self) -> str:
        """Canonical text, e.g. ``-2*[1]+[t^2+t+1]``."""
        if not self._terms:
            return "0"
        parts = []
        for point, k in self.items():
            text = point.format()
            if k == 1:
                parts.append(f"+{text}")
            elif k == -1:
                parts.append(f"-{text}")
            elif k > 0:
                parts.append(f"+{k}*{text}")
            else:
                parts.append(f"{k}*{text}")
        return "".join(parts).lstrip("+")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Divisor({self.format()})"


def div_twist(E: Divisor, n: int, q: Optional[int] = None) -> Divisor:
    """
    Apply the n-fold twist to every Finite coordinate.

    :param E: Divisor
    :type E: Divisor
    :param n: Twist exponent
    :type n: int
    :param q: Base field order, used for bare finite field coordinates
    :type q: int or None
    :returns: E^(n)
    :rtype: Divisor
    :raises NoRoot: When a negative twist has no root
    """
    terms = []
    for point, k in E.items():
        if isinstance(point, Finite):
            x = point.x
            if isinstance(x, KElem):
                point = Finite(x.field.frobenius(x, n))
            else:
                point = Finite(frobenius(x, n, q))
        terms.append((point, k))
    return Divisor(terms)


def supported_away(E: Divisor, D: Divisor) -> bool:
    """
    Tell whether the supports of E and D are disjoint.

    :param E: Divisor
    :type E: Divisor
    :param D: Divisor, typically a conductor
    :type D: Divisor
    :returns: disjointness
    :rtype: bool
    """
    return not any(
        points_meet(a, b) for a in E.support for b in D.support
    )


def splice_closed(point: Point, field: FieldDesc) -> List[Finite]:
    """
    Split a closed point into its rational points over an extension.

    :param point: Closed or Finite point over the base field
    :type point: Point
    :param field: Extension of the base field
    :type field: FieldDesc
    :returns: the roots as Finite points, ascending
    :rtype: list
    :raises FieldTooSmall: When the degree of the point does not divide
        the extension degree
    """
    if isinstance(point, Finite):
        return [Finite(field.coerce(point.x))]
    if not isinstance(point, Closed):
        raise FieldMismatch("Only closed points split")
    extension = field.subfield_degree(point.poly.field)
    if extension % point.degree != 0:
        raise FieldTooSmall(
            f"{point.format()} does not split over {field!r}"
        )
    roots = poly_roots(point.poly.change_field(field))
    return [Finite(root) for root in roots]


def point_polynomial(point: Point, field: Any) -> Optional[Poly]:
    """
    Monic polynomial over field vanishing exactly at point.

    :returns: t - x for Finite(x), the closed polynomial for Closed, None
        for Infinity
    :rtype: Poly or None
    """
    if isinstance(point, Finite):
        return Poly.linear(field, field.coerce(point.x))
    if isinstance(point, Closed):
        return point.poly.change_field(field)
    return None
