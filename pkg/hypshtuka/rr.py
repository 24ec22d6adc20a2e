"""Riemann-Roch spaces, residues and the residue pairing on P^1."""
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
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import Point
from hypshtuka.divisor import common_field
from hypshtuka.divisor import point_polynomial
from hypshtuka.errors import InputError
from hypshtuka.errors import PoleOnConductor
from hypshtuka.func import RatFunc
from hypshtuka.func import divisor_of
from hypshtuka.linalg import rank
from hypshtuka.linalg import solve
from hypshtuka.model.point import Closed
from hypshtuka.model.point import Infinity
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)


class Differential:
    """
    Meromorphic differential coeff * dt.

    :ivar coeff: dt-coefficient
    :vartype coeff: RatFunc
    """

    __slots__ = ("coeff",)

    def __init__(self, coeff: RatFunc) -> None:
        self.coeff = coeff

    @classmethod
    def dt(cls, field: Any) -> "Differential":
        return cls(RatFunc.one(field))

    @property
    def field(self) -> Any:
        return self.coeff.field

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Differential):
            return NotImplemented
        return self.coeff == other.coeff

    def __hash__(self) -> int:
        return hash(self.coeff)

    def __add__(self, other: "Differential") -> "Differential":
        return Differential(self.coeff + other.coeff)

    def __sub__(self, other: "Differential") -> "Differential":
        return Differential(self.coeff - other.coeff)

    def __neg__(self) -> "Differential":
        return Differential(-self.coeff)

    def __mul__(self, other: Any) -> "Differential":
        """Product with a function or a constant."""
        return Differential(self.coeff * other)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def divisor(self) -> Divisor:
        """Divisor of coeff * dt, (coeff) - 2[inf]."""
        return divisor_of(self.coeff) - Divisor.infinity(2)

    def format(self) -> str:
        if self.coeff.is_one():
            return "dt"
        text = self.coeff.format()
        if "+" in text or "-" in text:
            text = f"({text})"
        return f"{text}*dt"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Differential({self.format()})"


def _resolve_field(E: Divisor, field: Any) -> Any:
    resolved = E.coefficient_field(field) if field is None else field
    if resolved is None:
        raise InputError(f"Coefficient field required for {E.format()}")
    return resolved


def rr_numerators(E: Divisor, field: Any = None) -> Tuple[Poly, List[Poly]]:
    """
    Common denominator h and numerators g_i of a basis g_i/h of L(E).

    :param E: Divisor
    :type E: Divisor
    :param field: Coefficient field, inferred from E when omitted
    :type field: FieldDesc or KField or None
    :returns: (h, [z, z*t, ..., z*t^deg E]) with h the product over the
        positive finite part and z the product over the negative finite
        part
    :rtype: tuple
    """
    field = _resolve_field(E, field)
    h = Poly.one(field)
    z = Poly.one(field)
    for point, k in E.items():
        factor = point_polynomial(point, field)
        if factor is None:
            continue
        if k > 0:
            h = h * factor**k
        else:
            z = z * factor ** (-k)
    numerators = [z.shift(i) for i in range(E.degree + 1)]
    return h, numerators


def rr_basis(E: Divisor, field: Any = None) -> List[RatFunc]:
    """
    Basis of L(E) = {f : (f) + E >= 0}, ascending numerator degree.

    :param E: Divisor
    :type E: Divisor
    :param field: Coefficient field, inferred from E when omitted
    :type field: FieldDesc or KField or None
    :returns: deg E + 1 functions, none when deg E < 0
    :rtype: list
    """
    h, numerators = rr_numerators(E, field)
    logger.debug(f"L({E.format()}) has dimension {len(numerators)}")
    return [RatFunc.make(g, h) for g in numerators]


def omega_basis(E: Divisor, field: Any = None) -> List[Differential]:
    """
    Basis of the differentials w with (w) >= E.

    :param E: Divisor
    :type E: Divisor
    :param field: Coefficient field, inferred from E when omitted
    :type field: FieldDesc or KField or None
    :returns: -deg E - 1 differentials, none when deg E > -2
    :rtype: list
    """
    field = _resolve_field(E, field)
    return [
        Differential(f) for f in rr_basis(-E - Divisor.infinity(2), field)
    ]


def _local_numerator(f: RatFunc, pi: Poly) -> Tuple[int, Poly]:
    """
    Pole order k of f along pi and num with f = num / pi^k mod O.

    num has degree below k * deg pi.
    """
    top, bottom = f.cancel_at(pi)
    k = bottom.valuation_at(pi)
    if k == 0:
        return 0, Poly.zero(f.field)
    modulus = pi**k
    rest = bottom // modulus
    num = (top * rest.inverse_mod(modulus)) % modulus
    return k, num


def _residue_at_infinity(f: RatFunc) -> Any:
    top, bottom = f.fraction()
    n, d = top.degree, bottom.degree
    j = n - d + 1
    if f.is_zero() or j < 0:
        return f.field.zero
    series = top.reverse(n) * bottom.reverse(d).series_inverse(j + 1)
    return -series.coefficient(j)


def _trace_class(c: Poly, pi: Poly) -> Any:
    """Trace over F_q of the class of c in F_q[t]/(pi)."""
    return ((c * pi.derivative()) % pi).coefficient(pi.degree - 1)


def residue(omega: Differential, point: Point, trace: bool = True) -> Any:
    """
    Residue of a differential at a point.

    :param omega: Differential
    :type omega: Differential
    :param point: Finite, Closed or Infinity
    :type point: Point
    :param trace: At a closed point, return the trace to F_q instead of
        the residue class in F_q[t]/(p)
    :type trace: bool
    :returns: residue, a Poly of degree below deg p for an untraced
        closed point
    :rtype: Any
    """
    f = omega.coeff
    if isinstance(point, Infinity):
        return _residue_at_infinity(f)
    field = common_field(
        [f.field, Divisor.point(point).coefficient_field(f.field)]
    )
    f = f.change_field(field)
    pi = point_polynomial(point, f.field)
    k, num = _local_numerator(f, pi)
    traced = num.coefficient(k * pi.degree - 1)
    if not isinstance(point, Closed) or trace:
        return traced
    d = pi.degree
    traces = [
        _trace_class(Poly.monomial(f.field, n), pi) for n in range(2 * d)
    ]
    gram = [[traces[i + j] for j in range(d)] for i in range(d)]
    t = RatFunc.t(f.field)
    rhs = [residue(Differential(f * t**i), point) for i in range(d)]
    coordinates = solve(gram, rhs, f.field)
    return Poly(f.field, coordinates)


class PrincipalPart:
    """
    Element of H^0(O(D)/O): one local principal part per point of D.

    At a finite point of multiplicity n the part is a/pi^n with
    deg a < n * deg pi, stored as a. At infinity it is a polynomial in t
    without constant term and of degree at most n.

    :ivar D: Conductor
    :vartype D: Divisor
    :ivar field: Coefficient field of the parts
    :vartype field: FieldDesc or KField
    :ivar parts: Numerator per point of the support of D
    :vartype parts: dict
    """

    __slots__ = ("D", "field", "parts")

    def __init__(
        self, D: Divisor, field: Any, parts: Dict[Point, Poly]
    ) -> None:
        self.D = D
        self.field = field
        self.parts = {
            point: parts.get(point, Poly.zero(field)) for point in D.support
        }

    @classmethod
    def zero(cls, D: Divisor, field: Any) -> "PrincipalPart":
        return cls(D, field, {})

    def _same(self, other: "PrincipalPart") -> None:
        if self.D != other.D:
            raise InputError("Principal parts along different conductors")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrincipalPart):
            return NotImplemented
        return self.D == other.D and self.coordinates() == other.coordinates()

    def __hash__(self) -> int:
        return hash((self.D, tuple(self.coordinates())))

    def __add__(self, other: "PrincipalPart") -> "PrincipalPart":
        self._same(other)
        return PrincipalPart(
            self.D,
            self.field,
            {
                p: a + other.parts[p].change_field(self.field)
                for p, a in self.parts.items()
            },
        )

    def __neg__(self) -> "PrincipalPart":
        return PrincipalPart(
            self.D, self.field, {p: -a for p, a in self.parts.items()}
        )

    def __sub__(self, other: "PrincipalPart") -> "PrincipalPart":
        return self + (-other)

    def scale(self, c: Any) -> "PrincipalPart":
        c = self.field.coerce(c)
        return PrincipalPart(
            self.D, self.field, {p: a.scale(c) for p, a in self.parts.items()}
        )

    __mul__ = scale
    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.parts.values())

    def change_field(self, field: Any) -> "PrincipalPart":
        return PrincipalPart(
            self.D,
            field,
            {p: a.change_field(field) for p, a in self.parts.items()},
        )

    def lift(self) -> RatFunc:
        """
        Canonical lifting, the sum of the local parts.

        :returns: function in H^0(O(D)) with principal part self
        :rtype: RatFunc
        """
        h = Poly.one(self.field)
        for point, k in self.D.items():
            factor = point_polynomial(point, self.field)
            if factor is not None:
                h = h * factor**k
        num = Poly.zero(self.field)
        for point, a in self.parts.items():
            factor = point_polynomial(point, self.field)
            if factor is None:
                num = num + a * h
            else:
                num = num + a * (h // factor ** self.D.multiplicity(point))
        return RatFunc.make(num, h)

    def coordinates(self) -> List[Any]:
        """
        Coordinates in the basis t^i/pi^n (i < n deg pi) at finite points
        and t^i (1 <= i <= n) at infinity, points in support order.
        """
        coords: List[Any] = []
        for point, k in self.D.items():
            a = self.parts[point]
            if isinstance(point, Infinity):
                coords.extend(a.coefficient(i) for i in range(1, k + 1))
            else:
                size = k * point.degree
                coords.extend(a.coefficient(i) for i in range(size))
        return coords

    @classmethod
    def from_coordinates(
        cls, D: Divisor, field: Any, coords: Sequence[Any]
    ) -> "PrincipalPart":
        parts = {}
        position = 0
        for point, k in D.items():
            if isinstance(point, Infinity):
                values = [field.zero] + [
                    field.coerce(c) for c in coords[position : position + k]
                ]
                position += k
            else:
                size = k * point.degree
                values = [
                    field.coerce(c)
                    for c in coords[position : position + size]
                ]
                position += size
            parts[point] = Poly(field, values)
        return cls(D, field, parts)

    @classmethod
    def basis(cls, D: Divisor, field: Any) -> List["PrincipalPart"]:
        """F_q-basis matching the coordinates, deg D elements."""
        n = D.degree
        result = []
        for i in range(n):
            coords = [field.zero] * n
            coords[i] = field.one
            result.append(cls.from_coordinates(D, field, coords))
        return result

    def act(self, unit: Any) -> "PrincipalPart":
        """
        Module action of an element of H^0(O_D) on the principal part.

        :param unit: Element with per-point components
        :type unit: ODElement
        :returns: product, reduced modulo O
        :rtype: PrincipalPart
        """
        parts = {}
        for point, k in self.D.items():
            a = self.parts[point]
            u = unit.components[point].change_field(self.field)
            if isinstance(point, Infinity):
                values = [self.field.zero] * (k + 1)
                for i in range(1, k + 1):
                    for j in range(0, i):
                        values[i - j] = values[i - j] + a.coefficient(
                            i
                        ) * u.coefficient(j)
                parts[point] = Poly(self.field, values)
            else:
                modulus = point_polynomial(point, self.field) ** k
                parts[point] = (a * u) % modulus
        return PrincipalPart(self.D, self.field, parts)

    def format(self) -> str:
        return " + ".join(
            f"{point.format()}:{a.format('t')}"
            for point, a in self.parts.items()
        )

    def __repr__(self) -> str:
        return f"PrincipalPart({self.format()})"


def principal_part_of(f: RatFunc, D: Divisor) -> PrincipalPart:
    """
    Image of f in H^0(O(D)/O).

    :param f: Function with poles along D bounded by D
    :type f: RatFunc
    :param D: Effective conductor
    :type D: Divisor
    :returns: principal part of f along D
    :rtype: PrincipalPart
    :raises PoleOnConductor: When a pole of f along D exceeds D
    """
    field = f.field
    parts = {}
    for point, n in D.items():
        if isinstance(point, Infinity):
            top, bottom = f.fraction()
            quotient = top // bottom
            if quotient.degree > n:
                raise PoleOnConductor(
                    f"Pole of {f.format()} at infinity exceeds {n}"
                )
            parts[point] = Poly(
                field, (field.zero,) + quotient.coeffs[1:]
            )
            continue
        pi = point_polynomial(point, field)
        k, num = _local_numerator(f, pi)
        if k > n:
            raise PoleOnConductor(
                f"Pole of {f.format()} at {point.format()} exceeds {n}"
            )
        parts[point] = num * pi ** (n - k) if k else num
    return PrincipalPart(D, field, parts)


def res_pairing(
    omega: Differential, alpha: PrincipalPart, D: Optional[Divisor] = None
) -> Any:
    """
    RES_D(omega * alpha), the sum of traced residues along D.

    :param omega: Differential regular along D
    :type omega: Differential
    :param alpha: Principal part along D
    :type alpha: PrincipalPart
    :param D: Conductor, defaults to alpha's
    :type D: Divisor or None
    :returns: value in the coefficient field
    :rtype: Any
    """
    D = alpha.D if D is None else D
    product = Differential(omega.coeff * alpha.lift())
    acc = product.field.zero
    for point in D.support:
        acc = acc + residue(product, point)
    return acc


def local_differentials(
    point: Point, n: int, field: Any
) -> List[Differential]:
    """Basis of Omega/Omega(-n point) near point."""
    t = RatFunc.t(field)
    if isinstance(point, Infinity):
        return [Differential(-(t ** (-(j + 2)))) for j in range(n)]
    size = n * point.degree
    return [
        Differential(RatFunc.from_poly(Poly.monomial(field, j)))
        for j in range(size)
    ]


def residue_gram(D: Divisor, field: Any) -> List[List[Any]]:
    """
    Gram matrix of RES_D between F_q-bases of H^0(O(D)/O) and of
    Omega/Omega(-D), block diagonal over the points of D.

    :param D: Nonzero effective divisor over F_q
    :type D: Divisor
    :param field: Base field F_q
    :type field: FieldDesc
    :returns: deg D by deg D matrix
    :rtype: list
    """
    n = D.degree
    gram = [[field.zero] * n for _ in range(n)]
    offset = 0
    for point, k in D.items():
        local = Divisor.point(point, k)
        parts = PrincipalPart.basis(local, field)
        forms = local_differentials(point, k, field)
        for i, alpha in enumerate(parts):
            for j, omega in enumerate(forms):
                gram[offset + i][offset + j] = res_pairing(omega, alpha)
        offset += len(parts)
    return gram


def pairing_is_perfect(D: Divisor, field: Any) -> bool:
    """True when the Gram matrix of RES_D is invertible."""
    return rank(residue_gram(D, field), field) == D.degree


def residue_sum(omega: Differential) -> Any:
    """
    Sum of the traced residues of omega over all its poles.

    Vanishes for every differential over F_q by the residue theorem.

    :param omega: Nonzero differential
    :type omega: Differential
    :returns: sum of residues
    :rtype: Any
    """
    acc = residue(omega, Infinity())
    poles = divisor_of(omega.coeff).negative_part()
    for point in poles.support:
        if isinstance(point, Infinity):
            continue
        acc = acc + residue(omega, point)
    return acc
