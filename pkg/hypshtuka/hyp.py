"""Hypergeometric ratios in the high and low degree regimes."""
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
from typing import Callable
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.conductor import check_conductor
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import common_field
from hypshtuka.divisor import supported_away
from hypshtuka.errors import DegenerateFunctional
from hypshtuka.errors import InputError
from hypshtuka.errors import SolveFailed
from hypshtuka.errors import SupportMeetsConductor
from hypshtuka.errors import UndefinedRegime
from hypshtuka.errors import WrongRegime
from hypshtuka.errors import ZeroAlphaBeta
from hypshtuka.fields import DEFAULT_MAX_ENUM
from hypshtuka.fields import enumerate_span
from hypshtuka.func import RatFunc
from hypshtuka.linalg import solve
from hypshtuka.model.hyp_method import HypMethod
from hypshtuka.moore import moore_det_polys
from hypshtuka.poly import Poly
from hypshtuka.rr import Differential
from hypshtuka.rr import PrincipalPart
from hypshtuka.rr import principal_part_of
from hypshtuka.rr import res_pairing
from hypshtuka.rr import rr_numerators

logger = logger_factory.logger_factory.get_logger(__name__)

PRESETS: Dict[str, Callable[[RatFunc], RatFunc]] = {
    "alpha_inf": lambda t: t,
    "alpha_1": lambda t: 1 / (1 - t),
    "alpha_0": lambda t: (t - 1) / t,
}


def preset_function(name: str, field: Any) -> RatFunc:
    """
    Representative of a named principal part.

    :param name: One of alpha_inf, alpha_1, alpha_0
    :type name: str
    :param field: Base field
    :type field: FieldDesc
    :returns: t, 1/(1-t) or (t-1)/t
    :rtype: RatFunc
    :raises InputError: For an unknown name
    """
    if name not in PRESETS:
        raise InputError(f"Unknown principal part preset '{name}'")
    return PRESETS[name](RatFunc.t(field))


def preset(name: str, D: Divisor, field: Any) -> PrincipalPart:
    """Principal part along D of a named representative."""
    return principal_part_of(preset_function(name, field), D)


def _field_of(
    D: Divisor, alpha: PrincipalPart, beta: PrincipalPart, E: Divisor
) -> Any:
    field = common_field([alpha.field, beta.field])
    field = common_field(
        [field, D.coefficient_field(field), E.coefficient_field(field)]
    )
    return field


def _validate(
    D: Divisor, alpha: PrincipalPart, beta: PrincipalPart, E: Divisor
) -> None:
    check_conductor(D)
    if alpha.is_zero() or beta.is_zero():
        raise ZeroAlphaBeta("Principal parts must be nonzero")
    if not supported_away(E, D):
        raise SupportMeetsConductor(
            f"{E.format()} meets the conductor {D.format()}"
        )
    if not E.is_base_rational() or not D.is_base_rational():
        raise InputError(f"{E.format()} and {D.format()} must be F_q-rational")


def lifting_system(
    E: Divisor, D: Divisor, field: Any
) -> Tuple[List[List[Any]], Poly, List[Poly]]:
    """
    Principal part coordinates of the basis of L(E + D).

    :returns: (coordinate rows, common denominator h, basis numerators)
    :rtype: tuple
    """
    h, numerators = rr_numerators(E + D, field)
    columns = [
        principal_part_of(RatFunc.make(g, h), D).coordinates()
        for g in numerators
    ]
    return [list(row) for row in zip(*columns)], h, numerators


def lift_numerator(
    alpha: PrincipalPart,
    E: Divisor,
    field: Any,
    system: Optional[Tuple[List[List[Any]], Poly, List[Poly]]] = None,
) -> Tuple[Poly, Poly]:
    """
    Lifting of alpha into H^0(O(E + D)) as numerator over a fixed denominator.

    :param alpha: Principal part along D
    :type alpha: PrincipalPart
    :param E: Divisor supported away from D, deg E >= -1
    :type E: Divisor
    :param field: Base field
    :type field: FieldDesc
    :param system: Result of lifting_system for E and D, built if omitted
    :type system: tuple or None
    :returns: (numerator, denominator H) with numerator/H a lifting
    :rtype: tuple
    :raises SolveFailed: When alpha has no lifting
    """
    D = alpha.D
    if system is None:
        system = lifting_system(E, D, field)
    rows, h, numerators = system
    target = alpha.change_field(field).coordinates()
    coefficients = solve(rows, target, field) if rows else None
    if coefficients is None:
        raise SolveFailed(
            f"{alpha.format()} does not lift to L({(E + D).format()})"
        )
    lift = Poly.zero(field)
    for c, g in zip(coefficients, numerators):
        if c != field.zero:
            lift = lift + g.scale(c)
    return lift, h


def span_numerators(E: Divisor, D: Divisor, field: Any) -> List[Poly]:
    """Basis of L(E) as numerators over the denominator of L(E + D)."""
    h_total, _ = rr_numerators(E + D, field)
    h, numerators = rr_numerators(E, field)
    factor = h_total // h
    return [g * factor for g in numerators]


def hyp_high(
    D: Divisor,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    E: Divisor,
    method: HypMethod = HypMethod.ENUMERATE,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> RatFunc:
    """
    Hyp_D(alpha, beta, E) for deg E > -2.

    :param D: Nonzero effective conductor over F_q
    :type D: Divisor
    :param alpha: Nonzero principal part along D
    :type alpha: PrincipalPart
    :param beta: Nonzero principal part along D
    :type beta: PrincipalPart
    :param E: F_q-rational divisor supported away from D
    :type E: Divisor
    :param method: Literal product or ratio of Moore determinants
    :type method: HypMethod
    :param max_enum: Enumeration cap
    :type max_enum: int
    :returns: the hypergeometric ratio
    :rtype: RatFunc
    :raises WrongRegime: When deg E <= -2
    """
    _validate(D, alpha, beta, E)
    if E.degree <= -2:
        raise WrongRegime(f"deg {E.format()} = {E.degree} is not above -2")
    field = _field_of(D, alpha, beta, E)
    system = lifting_system(E, D, field)
    a, _ = lift_numerator(alpha, E, field, system)
    b, _ = lift_numerator(beta, E, field, system)
    basis = span_numerators(E, D, field)
    logger.debug(
        f"High regime Hyp over L({E.format()}) of dimension {len(basis)} "
        f"by {method.value}"
    )
    if method == HypMethod.MOORE:
        return RatFunc.make(
            moore_det_polys([a] + basis), moore_det_polys([b] + basis)
        )
    num = Poly.one(field)
    den = Poly.one(field)
    zero = Poly.zero(field)
    for e in enumerate_span(basis, field, max_enum, zero):
        num = num * (a + e)
        den = den * (b + e)
    return RatFunc.make(num, den)


def _affine_product(
    numerators: List[Poly],
    h: Poly,
    alpha: PrincipalPart,
    field: Any,
    max_enum: int,
) -> Poly:
    values = [
        res_pairing(Differential(RatFunc.make(g, h)), alpha)
        for g in numerators
    ]
    pivot = next(
        (i for i, value in enumerate(values) if value != field.zero), None
    )
    if pivot is None:
        raise DegenerateFunctional(
            f"Residue functional of {alpha.format()} vanishes"
        )
    scale = field.one / values[pivot]
    coset = numerators[pivot].scale(scale)
    kernel = [
        g - numerators[pivot].scale(value * scale)
        for i, (g, value) in enumerate(zip(numerators, values))
        if i != pivot
    ]
    product = Poly.one(field)
    for k in enumerate_span(kernel, field, max_enum, Poly.zero(field)):
        product = product * (coset + k)
    return product


def hyp_low(
    D: Divisor,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    E: Divisor,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> RatFunc:
    """
    Hyp_D(alpha, beta, E) for deg E < -deg D.

    Quotient of the products of the differentials w in H^0(Omega(-E))
    with RES_D(w beta~) = 1 by those with RES_D(w alpha~) = 1, each
    differential represented by its dt-coefficient.

    :param D: Nonzero effective conductor over F_q
    :type D: Divisor
    :param alpha: Nonzero principal part along D
    :type alpha: PrincipalPart
    :param beta: Nonzero principal part along D
    :type beta: PrincipalPart
    :param E: F_q-rational divisor supported away from D
    :type E: Divisor
    :param max_enum: Enumeration cap
    :type max_enum: int
    :returns: the hypergeometric ratio
    :rtype: RatFunc
    :raises WrongRegime: When deg E >= -deg D
    """
    _validate(D, alpha, beta, E)
    if E.degree >= -D.degree:
        raise WrongRegime(
            f"deg {E.format()} = {E.degree} is not below -{D.degree}"
        )
    field = _field_of(D, alpha, beta, E)
    h, numerators = rr_numerators(-E - Divisor.infinity(2), field)
    logger.debug(
        f"Low regime Hyp over {len(numerators)} differentials, "
        f"{field.order}^{len(numerators) - 1} per affine subset"
    )
    alpha = alpha.change_field(field)
    beta = beta.change_field(field)
    num = _affine_product(numerators, h, beta, field, max_enum)
    den = _affine_product(numerators, h, alpha, field, max_enum)
    return RatFunc.make(num, den)


def hyp(
    D: Divisor,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    E: Divisor,
    method: HypMethod = HypMethod.ENUMERATE,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> RatFunc:
    """
    Hyp_D(alpha, beta, E) in whichever regime deg E falls.

    :raises UndefinedRegime: When -deg D <= deg E <= -2
    """
    check_conductor(D)
    if E.degree > -2:
        return hyp_high(D, alpha, beta, E, method, max_enum)
    if E.degree < -D.degree:
        return hyp_low(D, alpha, beta, E, max_enum)
    raise UndefinedRegime(
        f"Hyp is undefined for deg E = {E.degree} and deg D = {D.degree}"
    )


def epsilon(N: int) -> int:
    if N == 0:
        raise InputError("N must be nonzero")
    return 1 if N > 0 else -1


def basic_exponent(q: int, N: int) -> int:
    """Signed exponent (q^|N| - 1)/(q - 1) of the three-point formulas."""
    return epsilon(N) * (q ** abs(N) - 1) // (q - 1)


class HypCase(NamedTuple):
    """Inputs of a closed-form evaluation and its expected value."""

    D: Divisor
    alpha: PrincipalPart
    beta: PrincipalPart
    E: Divisor
    expected: RatFunc


THREE_POINT_FORMS = ("inf-zero", "one-inf", "zero-one")


def three_point_case(form: str, field: Any, N: int) -> HypCase:
    """
    One of the three closed-form evaluations on the points 0, 1, inf.

    inf-zero: Hyp_[inf]+[0](alpha_inf, alpha_0, (N-2)[1]) = t^e
    one-inf: Hyp_[1]+[inf](alpha_1, alpha_inf, (N-2)[0]) = (1/(1-t))^e
    zero-one: Hyp_[0]+[1](alpha_0, alpha_1, (N-2)[inf]) = ((t-1)/t)^e

    with e the signed exponent for q = field order.

    :param form: Name in THREE_POINT_FORMS
    :type form: str
    :param field: Base field F_q
    :type field: FieldDesc
    :param N: Nonzero integer
    :type N: int
    :returns: the case
    :rtype: HypCase
    """
    zero = Divisor.at(field.zero)
    one = Divisor.at(field.one)
    infinity = Divisor.infinity()
    if form == "inf-zero":
        D, a, b, fixed = infinity + zero, "alpha_inf", "alpha_0", one
    elif form == "one-inf":
        D, a, b, fixed = one + infinity, "alpha_1", "alpha_inf", zero
    elif form == "zero-one":
        D, a, b, fixed = zero + one, "alpha_0", "alpha_1", infinity
    else:
        raise InputError(f"Unknown three-point form '{form}'")
    expected = preset_function(a, field) ** basic_exponent(field.order, N)
    return HypCase(
        D,
        preset(a, D, field),
        preset(b, D, field),
        fixed * (N - 2),
        expected,
    )


def simple_example_case(field: Any, N: int, c: Any) -> HypCase:
    """
    Hyp_[inf]+[0](alpha_inf, alpha_0, [c] + (N-3)[1]) = c^-1 t^e.

    :param field: Base field F_q
    :type field: FieldDesc
    :param N: Nonzero integer
    :type N: int
    :param c: Nonzero element of F_q
    :type c: FieldElem
    :returns: the case
    :rtype: HypCase
    """
    c = field.coerce(c)
    if c == field.zero:
        raise InputError("c must be nonzero")
    D = Divisor.infinity() + Divisor.at(field.zero)
    t = RatFunc.t(field)
    expected = (t ** basic_exponent(field.order, N)).scale(field.one / c)
    return HypCase(
        D,
        preset("alpha_inf", D, field),
        preset("alpha_0", D, field),
        Divisor.at(c) + Divisor.at(field.one, N - 3),
        expected,
    )
