"""Moore determinants and the product side of the Moore identity."""
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
from typing import List
from typing import Optional
from typing import Sequence

from hypshtuka import logger_factory
from hypshtuka.errors import InputError
from hypshtuka.fields import DEFAULT_MAX_ENUM
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import FieldElem
from hypshtuka.fields import KElem
from hypshtuka.fields import enumerate_span
from hypshtuka.fields import field_of_order
from hypshtuka.func import RatFunc
from hypshtuka.linalg import bareiss_determinant
from hypshtuka.linalg import determinant
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)


def _order(x: Any, q: Optional[int]) -> int:
    return x.field.base.order if q is None else q


def _poly_power(f: Poly, k: int, q: int) -> Poly:
    if q == f.field.base.order:
        return f.twist_power(k)
    step = q**k
    zero = f.field.zero
    result = [zero] * ((len(f.coeffs) - 1) * step + 1) if f.coeffs else []
    for i, c in enumerate(f.coeffs):
        if c != zero:
            result[i * step] = c**step
    return Poly(f.field, result)


def q_power(x: Any, k: int, q: Optional[int] = None) -> Any:
    """
    Return x^(q^k) for k >= 0.

    :param x: Poly, RatFunc, KElem or FieldElem
    :type x: Any
    :param k: Exponent of the q-power map
    :type k: int
    :param q: Order of the scalar field, defaults to the base field of x
    :type q: int or None
    :returns: x^(q^k)
    :rtype: Any
    """
    if isinstance(x, Poly):
        return _poly_power(x, k, _order(x, q))
    if isinstance(x, RatFunc):
        q = _order(x, q)
        num, den = x.fraction()
        return RatFunc.make(_poly_power(num, k, q), _poly_power(den, k, q))
    if isinstance(x, KElem) and q is None:
        return x.field.frobenius(x, k)
    return x ** (_order(x, q) ** k)


def scalar_field(x: Any, q: Optional[int] = None) -> FieldDesc:
    """F_q acting on the values x, the base field unless q is given."""
    if q is not None:
        return field_of_order(q)
    return x.field.base


def _zero_like(x: Any) -> Any:
    if isinstance(x, Poly):
        return Poly.zero(x.field)
    if isinstance(x, RatFunc):
        return RatFunc.zero(x.field)
    return x.field.zero


def _one_like(x: Any) -> Any:
    if isinstance(x, Poly):
        return Poly.one(x.field)
    if isinstance(x, RatFunc):
        return RatFunc.one(x.field)
    return x.field.one


def moore_matrix(
    xs: Sequence[Any], q: Optional[int] = None
) -> List[List[Any]]:
    """
    Rows x_j^(q^(n-1)) down to x_j^(q^0).

    :param xs: Elements x_1, ..., x_n
    :type xs: Sequence
    :param q: Order of the scalar field
    :type q: int or None
    :returns: n by n matrix
    :rtype: list
    """
    n = len(xs)
    return [[q_power(x, n - 1 - i, q) for x in xs] for i in range(n)]


def moore_det_polys(xs: Sequence[Poly], q: Optional[int] = None) -> Poly:
    """Moore determinant of polynomials by fraction-free elimination."""
    if not xs:
        raise InputError("Moore determinant needs at least one element")
    field = xs[0].field
    xs = [x.change_field(field) for x in xs]
    return bareiss_determinant(moore_matrix(xs, q), Poly.one(field))


def moore_det(xs: Sequence[Any], q: Optional[int] = None) -> Any:
    """
    Moore determinant of x_1, ..., x_n.

    Rational functions are brought to a common denominator H first; the
    determinant of the numerators is divided by H^(1 + q + ... + q^(n-1)).

    :param xs: Poly, RatFunc, KElem or FieldElem values of one kind
    :type xs: Sequence
    :param q: Order of the scalar field, defaults to the base field
    :type q: int or None
    :returns: determinant
    :rtype: Any
    :raises InputError: For an empty list
    """
    if not xs:
        raise InputError("Moore determinant needs at least one element")
    head = xs[0]
    if isinstance(head, Poly):
        return moore_det_polys(xs, q)
    if isinstance(head, RatFunc):
        field = head.field
        fractions = [x.change_field(field).fraction() for x in xs]
        common = Poly.one(field)
        for _, den in fractions:
            common = common * (den // common.gcd(den))
        numerators = [num * (common // den) for num, den in fractions]
        order = _order(head, q)
        weight = sum(order**k for k in range(len(xs)))
        det = moore_det_polys(numerators, q)
        return RatFunc.make(det, common**weight)
    if isinstance(head, (KElem, FieldElem)):
        return determinant(moore_matrix(xs, q), head.field)
    raise InputError(f"No Moore determinant for {type(head).__name__}")


def moore_product(
    xs: Sequence[Any],
    q: Optional[int] = None,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> Any:
    """
    Product over k of the products of x_k + a_(k+1) x_(k+1) + ... + a_n x_n
    with a ranging over F_q.

    :param xs: Elements x_1, ..., x_n
    :type xs: Sequence
    :param q: Order of the scalar field, defaults to the base field
    :type q: int or None
    :param max_enum: Cap on each enumerated span
    :type max_enum: int
    :returns: product side of the Moore identity
    :rtype: Any
    :raises BudgetExceeded: When a span exceeds max_enum
    """
    if not xs:
        raise InputError("Moore product needs at least one element")
    scalars = scalar_field(xs[0], q)
    zero = _zero_like(xs[0])
    result = _one_like(xs[0])
    for k, x in enumerate(xs):
        for e in enumerate_span(xs[k + 1 :], scalars, max_enum, zero):
            result = result * (x + e)
    logger.debug(f"Moore product of {len(xs)} elements over {scalars!r}")
    return result
