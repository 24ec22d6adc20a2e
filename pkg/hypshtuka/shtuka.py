"""Rank one shtukas with generic base point and their symbols."""
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
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from functools import cached_property
from typing import Any
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.conductor import check_conductor
from hypshtuka.conductor import equivalent_mod_D
from hypshtuka.conductor import is_one_mod_D
from hypshtuka.divisor import Divisor
from hypshtuka.divisor import Point
from hypshtuka.divisor import div_twist
from hypshtuka.divisor import points_meet
from hypshtuka.divisor import supported_away
from hypshtuka.errors import BadDegree
from hypshtuka.errors import ComputationError
from hypshtuka.errors import DeterminantVanishes
from hypshtuka.errors import InputError
from hypshtuka.errors import NoDecomposition
from hypshtuka.errors import NonGenericBasepoint
from hypshtuka.errors import NoRoot
from hypshtuka.errors import RelationFails
from hypshtuka.errors import SupportMeetsConductor
from hypshtuka.errors import ZeroAlphaBeta
from hypshtuka.fields import DEFAULT_MAX_ENUM
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import KElem
from hypshtuka.fields import KField
from hypshtuka.fields import frobenius
from hypshtuka.fields import k_field
from hypshtuka.func import RatFunc
from hypshtuka.func import divisor_of
from hypshtuka.func import rf_eval
from hypshtuka.func import rf_twist
from hypshtuka.hyp import hyp
from hypshtuka.hyp import lift_numerator
from hypshtuka.hyp import lifting_system
from hypshtuka.hyp import simple_example_case
from hypshtuka.linalg import determinant
from hypshtuka.linalg import rank_over_k
from hypshtuka.linalg import solve_over_k
from hypshtuka.model.hyp_method import HypMethod
from hypshtuka.model.point import Finite
from hypshtuka.model.symbol_method import SymbolMethod
from hypshtuka.moore import moore_det
from hypshtuka.poly import Poly
from hypshtuka.rr import Differential
from hypshtuka.rr import PrincipalPart
from hypshtuka.rr import res_pairing
from hypshtuka.rr import rr_basis
from hypshtuka.rr import rr_numerators

logger = logger_factory.logger_factory.get_logger(__name__)


@dataclass(frozen=True)
class ShtukaShape:
    """
    Origin of a shtuka built from an F_q-rational divisor E0.

    Case 1 has basepoint xi and zero xi^(N); case 2 has basepoint xi^(N)
    and zero xi. In both cases the symbol equals Hyp_D(., ., E0) at xi.

    :ivar case: 1 or 2
    :vartype case: int
    :ivar N: Twist count
    :vartype N: int
    :ivar E0: F_q-rational divisor
    :vartype E0: Divisor
    :ivar origin: The point xi
    :vartype origin: KElem
    """

    case: int
    N: int
    E0: Divisor
    origin: KElem


@dataclass(frozen=True)
class Shtuka:
    """
    Validated quadruple (D, xi, eta, E).

    :ivar D: Conductor
    :vartype D: Divisor
    :ivar xi: Basepoint, a generic element of K
    :vartype xi: KElem
    :ivar eta: Zero
    :vartype eta: Finite
    :ivar E: Divisor of degree -1 over K
    :vartype E: Divisor
    :ivar witness: g with (g) = E - E^(1) + xi^(1) - eta and g|_D == 1
    :vartype witness: RatFunc
    :ivar shape: Construction data, None for a user supplied shtuka
    :vartype shape: ShtukaShape or None
    """

    D: Divisor
    xi: KElem
    eta: Point
    E: Divisor
    witness: RatFunc
    shape: Optional[ShtukaShape] = dataclass_field(default=None)

    @property
    def field(self) -> KField:
        return self.xi.field

    @property
    def pole(self) -> Point:
        return Finite(frobenius(self.xi, 1))

    @cached_property
    def lifting(self) -> Tuple[List[List[KElem]], Poly, List[Poly]]:
        """Lifting data of H^0(O(E + D)), built once per shtuka."""
        return lifting_system(self.E, self.D, self.field)

    def format(self) -> str:
        return (
            f"({self.D.format()}, {self.xi.format()}, "
            f"{self.eta.format()}, {self.E.format()})"
        )


def shtuka_validate(
    D: Divisor,
    xi: KElem,
    eta: Any,
    E: Divisor,
    shape: Optional[ShtukaShape] = None,
) -> Shtuka:
    """
    Check the shtuka conditions and store the equivalence witness.

    :param D: Nonzero effective conductor over F_q
    :type D: Divisor
    :param xi: Basepoint
    :type xi: KElem
    :param eta: Zero, a Finite point or an element of K
    :type eta: Point or KElem
    :param E: Divisor of degree -1
    :type E: Divisor
    :param shape: Construction data to keep with the shtuka
    :type shape: ShtukaShape or None
    :returns: the validated shtuka
    :rtype: Shtuka
    :raises NonGenericBasepoint: When xi does not depend on tau
    :raises BadDegree: When deg E is not -1
    :raises SupportMeetsConductor: When xi, eta or E meets D
    :raises RelationFails: When E - E^(1) is not equivalent to
        eta - xi^(1) modulo D
    """
    check_conductor(D)
    if not isinstance(xi, KElem) or xi.is_constant():
        raise NonGenericBasepoint(f"Basepoint {xi!r} is not generic")
    K = xi.field
    if not isinstance(eta, Finite):
        eta = Finite(K.coerce(eta))
    if E.degree != -1:
        raise BadDegree(f"deg {E.format()} = {E.degree}, expected -1")
    E = E.over(K)
    base = Divisor.point(Finite(xi)) + Divisor.point(eta)
    if not supported_away(E, D) or not supported_away(base, D):
        raise SupportMeetsConductor(
            f"Shtuka data meets the conductor {D.format()}"
        )
    pole = Finite(frobenius(xi, 1))
    relation = Divisor.point(eta) - Divisor.point(pole)
    witness = equivalent_mod_D(E - div_twist(E, 1), relation, D, K)
    if witness is None:
        raise RelationFails(
            f"{E.format()} - E^(1) is not equivalent to "
            f"{relation.format()} modulo {D.format()}"
        )
    shtuka = Shtuka(D, xi, eta, E, witness, shape)
    logger.debug(f"Validated shtuka {shtuka.format()}")
    return shtuka


def nondegenerate(s: Shtuka) -> bool:
    """
    Tell whether eta avoids xi^(i) for 1 - deg(E + D) <= i <= 0.

    :param s: Shtuka
    :type s: Shtuka
    :returns: nondegeneracy
    :rtype: bool
    """
    for i in range(1 - (s.E + s.D).degree, 1):
        try:
            twisted = Finite(frobenius(s.xi, i))
        except NoRoot:
            continue
        if points_meet(s.eta, twisted):
            return False
    return True


def special_function(s: Shtuka) -> RatFunc:
    """
    The function f with f|_D == 1 and (f) = E^(1) - E - xi^(1) + eta.

    :param s: Validated shtuka
    :type s: Shtuka
    :returns: f
    :rtype: RatFunc
    :raises ComputationError: When the stored witness is inconsistent
    """
    f = s.witness.inverse()
    expected = (
        div_twist(s.E, 1)
        - s.E
        - Divisor.point(s.pole)
        + Divisor.point(s.eta)
    )
    if not is_one_mod_D(f, s.D) or divisor_of(f) != expected:
        raise ComputationError(  # pragma: no cover
            f"Special function of {s.format()} is inconsistent"
        )
    return f


def _check_alpha(*parts: PrincipalPart) -> None:
    if any(part.is_zero() for part in parts):
        raise ZeroAlphaBeta("Principal parts must be nonzero")


def lifting_matrix(s: Shtuka) -> Tuple[List[List[KElem]], Poly, List[Poly]]:
    """
    Principal part coordinates of the basis of H^0(O(E + D)).

    :returns: (rows of the coordinate matrix, denominator h, numerators)
    :rtype: tuple
    """
    return s.lifting


def psi_lift(s: Shtuka, alpha: PrincipalPart) -> RatFunc:
    """
    The unique element of H^0(O(E + D)) with principal part alpha.

    :param s: Nondegenerate shtuka
    :type s: Shtuka
    :param alpha: Nonzero principal part along D
    :type alpha: PrincipalPart
    :returns: psi_alpha
    :rtype: RatFunc
    :raises SolveFailed: When the lifting does not exist
    """
    _check_alpha(alpha)
    rows, h, numerators = lifting_matrix(s)
    coefficients = solve_over_k(rows, alpha.coordinates(), s.field)
    num = Poly.zero(s.field)
    for c, g in zip(coefficients, numerators):
        if not c.is_zero():
            num = num + g.scale(c)
    return RatFunc.make(num, h)


def _symbol_by_solve(
    s: Shtuka, alpha: PrincipalPart, beta: PrincipalPart
) -> KElem:
    ratio = psi_lift(s, alpha) / psi_lift(s, beta)
    return s.field.coerce(rf_eval(ratio, s.xi))


def _symbol_by_hyp(
    s: Shtuka,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    max_enum: int,
) -> KElem:
    if s.shape is None:
        raise NoDecomposition("Shtuka was not built from a divisor E0")
    value = hyp(s.D, alpha, beta, s.shape.E0, HypMethod.ENUMERATE, max_enum)
    return s.field.coerce(rf_eval(value, s.shape.origin))


def decompose(s: Shtuka) -> Tuple[Divisor, Divisor]:
    """
    Split E = E1 - E2 with E2 reduced effective.

    Case 1 shtukas use E1 = E0 and the twisted tail as E2; otherwise E1
    and E2 are the positive and negative parts of E.

    :raises NoDecomposition: When the split violates the determinant
        formula's hypotheses
    """
    if s.shape is not None and s.shape.case == 1:
        E1 = s.shape.E0.over(s.field)
        E2 = E1 - s.E
    else:
        E1, E2 = s.E.positive_part(), s.E.negative_part()
    check_decomposition(s, E1, E2)
    return E1, E2


def check_decomposition(s: Shtuka, E1: Divisor, E2: Divisor) -> None:
    """
    Validate a split E = E1 - E2 for the determinant formula.

    :raises NoDecomposition: When any hypothesis fails
    """
    basepoint = Divisor.point(Finite(s.xi))
    if (E1 - E2).over(s.field) != s.E:
        raise NoDecomposition(f"{E1.format()} - {E2.format()} is not E")
    if not E2.is_effective():
        raise NoDecomposition(f"{E2.format()} is not effective")
    for point, k in E2.items():
        if k != 1 or not isinstance(point, Finite):
            raise NoDecomposition(
                f"{E2.format()} must be a sum of distinct rational points"
            )
    if not supported_away(E1, E2) or not supported_away(E1 + E2, basepoint):
        raise NoDecomposition("Supports of E1, E2 and xi must be disjoint")
    if not supported_away(E1 + E2, s.D):
        raise NoDecomposition("E1 and E2 must avoid the conductor")


def _evaluation_det(
    functions: Sequence[RatFunc], points: Sequence[Any], K: KField
) -> KElem:
    matrix = [[K.coerce(rf_eval(f, x)) for x in points] for f in functions]
    return determinant(matrix, K)


def _symbol_by_determinant(
    s: Shtuka,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    decomposition: Optional[Tuple[Divisor, Divisor]],
) -> KElem:
    K = s.field
    if decomposition is None:
        E1, E2 = decompose(s)
    else:
        E1, E2 = decomposition
        check_decomposition(s, E1, E2)
    points = [s.xi] + [point.x for point in E2.support]
    basis = rr_basis(E1, K)
    if len(basis) != E2.degree:
        raise NoDecomposition(
            f"L({E1.format()}) has dimension {len(basis)}, "
            f"expected {E2.degree}"
        )
    system = lifting_system(E1, s.D, K)
    a, h = lift_numerator(alpha, E1, K, system)
    b, _ = lift_numerator(beta, E1, K, system)
    top = _evaluation_det([RatFunc.make(a, h)] + basis, points, K)
    bottom = _evaluation_det([RatFunc.make(b, h)] + basis, points, K)
    if top.is_zero() or bottom.is_zero():
        raise DeterminantVanishes(
            f"Evaluation determinant vanishes for {s.format()}"
        )
    logger.debug(f"Determinant symbol on {len(points)} points")
    return top / bottom


def dual_basis(
    E0: Divisor, alpha: PrincipalPart, field: FieldDesc
) -> List[RatFunc]:
    """
    dt-coefficients of a basis w_0, ..., w_N of H^0(Omega(-E0)) with
    RES_D(alpha~ w_k) = 1 for k = 0 and 0 otherwise.
    """
    h, numerators = rr_numerators(-E0 - Divisor.infinity(2), field)
    coefficients = [RatFunc.make(g, h) for g in numerators]
    values = [res_pairing(Differential(c), alpha) for c in coefficients]
    pivot = next(
        (i for i, v in enumerate(values) if v != field.zero), None
    )
    if pivot is None:
        raise DeterminantVanishes(
            f"Residue functional of {alpha.format()} vanishes"
        )
    head = coefficients[pivot].scale(field.one / values[pivot])
    rest = [
        c - head.scale(v)
        for i, (c, v) in enumerate(zip(coefficients, values))
        if i != pivot
    ]
    return [head] + rest


def residue_at_basepoint(s: Shtuka, alpha: PrincipalPart) -> KElem:
    """
    Res of psi_alpha dt at the basepoint of a case 2 shtuka.

    Equals -Moore(w_1, ..., w_N) / Moore(w_0, ..., w_N) at xi.
    """
    shape = s.shape
    field = alpha.field
    forms = dual_basis(shape.E0, alpha, field)
    whole = moore_det(forms)
    if whole.is_zero():
        raise DeterminantVanishes(
            f"Moore determinant vanishes for {s.format()}"
        )
    minor = moore_det(forms[1:]) if len(forms) > 1 else RatFunc.one(field)
    return s.field.coerce(rf_eval(-(minor / whole), shape.origin))


def cd_symbol(
    s: Shtuka,
    alpha: PrincipalPart,
    beta: PrincipalPart,
    method: SymbolMethod = SymbolMethod.SOLVE,
    decomposition: Optional[Tuple[Divisor, Divisor]] = None,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> KElem:
    """
    Catalan-Drinfeld symbol (psi_alpha / psi_beta)(xi).

    :param s: Nondegenerate shtuka
    :type s: Shtuka
    :param alpha: Nonzero principal part along D
    :type alpha: PrincipalPart
    :param beta: Nonzero principal part along D
    :type beta: PrincipalPart
    :param method: Linear solve, evaluation determinants, or Hyp at xi
    :type method: SymbolMethod
    :param decomposition: (E1, E2) for the determinant method
    :type decomposition: tuple or None
    :param max_enum: Enumeration cap for the Hyp method
    :type max_enum: int
    :returns: the symbol in K
    :rtype: KElem
    """
    _check_alpha(alpha, beta)
    if method == SymbolMethod.SOLVE:
        return _symbol_by_solve(s, alpha, beta)
    if method == SymbolMethod.HYP:
        return _symbol_by_hyp(s, alpha, beta, max_enum)
    if s.shape is not None and s.shape.case == 2 and decomposition is None:
        return residue_at_basepoint(s, alpha) / residue_at_basepoint(
            s, beta
        )
    return _symbol_by_determinant(s, alpha, beta, decomposition)


def _generic(xi: KElem) -> KField:
    if not isinstance(xi, KElem) or xi.is_constant():
        raise NonGenericBasepoint(f"Basepoint {xi!r} is not generic")
    return xi.field


def _check_E0(E0: Divisor, D: Divisor, degree: int) -> None:
    if E0.degree != degree:
        raise BadDegree(f"deg {E0.format()} = {E0.degree}, expected {degree}")
    if not supported_away(E0, D):
        raise SupportMeetsConductor(f"{E0.format()} meets {D.format()}")
    if not E0.is_base_rational():
        raise InputError(f"{E0.format()} must be F_q-rational")


def shtuka_from_E0_case1(
    D: Divisor, xi: KElem, N: int, E0: Divisor
) -> Shtuka:
    """
    Shtuka (D, xi, xi^(N), E0 - xi^(1) - ... - xi^(N-1)).

    :param D: Conductor
    :type D: Divisor
    :param xi: Generic basepoint
    :type xi: KElem
    :param N: Positive integer
    :type N: int
    :param E0: F_q-rational divisor of degree N - 2 away from D
    :type E0: Divisor
    :returns: nondegenerate shtuka
    :rtype: Shtuka
    """
    K = _generic(xi)
    if N <= 0:
        raise InputError(f"N = {N} must be positive")
    _check_E0(E0, D, N - 2)
    tail = Divisor(
        [(Finite(frobenius(xi, k)), 1) for k in range(1, N)]
    )
    E = E0.over(K) - tail
    eta = Finite(frobenius(xi, N))
    return shtuka_validate(D, xi, eta, E, ShtukaShape(1, N, E0, xi))


def shtuka_from_E0_case2(
    D: Divisor, xi: KElem, N: int, E0: Divisor
) -> Shtuka:
    """
    Shtuka (D, xi^(N), xi, E0 + xi + xi^(1) + ... + xi^(N)).

    :param D: Conductor
    :type D: Divisor
    :param xi: Generic point, the zero of the shtuka
    :type xi: KElem
    :param N: Integer above deg D - 2
    :type N: int
    :param E0: F_q-rational divisor of degree -N - 2 away from D
    :type E0: Divisor
    :returns: nondegenerate shtuka
    :rtype: Shtuka
    """
    K = _generic(xi)
    if N <= D.degree - 2:
        raise InputError(f"N = {N} must exceed deg D - 2 = {D.degree - 2}")
    _check_E0(E0, D, -N - 2)
    head = Divisor([(Finite(frobenius(xi, k)), 1) for k in range(N + 1)])
    E = E0.over(K) + head
    basepoint = frobenius(xi, N)
    return shtuka_validate(
        D, basepoint, Finite(xi), E, ShtukaShape(2, N, E0, xi)
    )


def drinfeld_iterates(f: RatFunc, psi: RatFunc, N: int) -> List[RatFunc]:
    """
    psi_0 = psi and psi_(k+1) = f * psi_k^(1) for k < N.

    :returns: [psi_0, ..., psi_N]
    :rtype: list
    """
    iterates = [psi]
    for _ in range(N):
        iterates.append(f * rf_twist(iterates[-1], 1))
    return iterates


def rank_over_K(fs: Sequence[RatFunc], K: Optional[KField] = None) -> int:
    """
    Dimension of the K-span of rational functions.

    Functions are put over a common denominator; the rank of the
    coefficient matrix of the numerators is computed by fraction-free
    elimination.

    :param fs: Functions over K or over its constants
    :type fs: Sequence
    :param K: Coefficient field, taken from the functions when omitted
    :type K: KField or None
    :returns: rank
    :rtype: int
    """
    if not fs:
        return 0
    if K is None:
        K = next((f.field for f in fs if isinstance(f.field, KField)), None)
    if K is None:
        K = k_field(fs[0].field, fs[0].field.base)
    fractions = [f.change_field(K).fraction() for f in fs]
    common = Poly.one(K)
    for _, den in fractions:
        common = common * (den // common.gcd(den))
    numerators = [num * (common // den) for num, den in fractions]
    width = max(g.degree for g in numerators) + 1
    if width <= 0:
        return 0
    matrix = [[g.coefficient(i) for i in range(width)] for g in numerators]
    return rank_over_k(matrix, K)


def chi_zero_rank(s: Shtuka, D1: Divisor, m: int, N: int) -> int:
    """
    Rank of psi_0, ..., psi_N for psi spanning the first basis vector of
    H^0(O(E + D1 - xi - xi^(-1) - ... - xi^(-(m-1)))).

    :param s: Shtuka
    :type s: Shtuka
    :param D1: F_q-rational divisor
    :type D1: Divisor
    :param m: Nonnegative integer at most deg(E + D1)
    :type m: int
    :param N: Positive integer
    :type N: int
    :returns: the rank, N + 1 by the linear independence of the iterates
    :rtype: int
    :raises InputError: When the hypotheses on m, N and eta fail
    """
    K = s.field
    top = (s.E + D1).degree
    if m < 0 or m > top or N <= 0:
        raise InputError(f"Need 0 <= m <= {top} and N > 0")
    for i in range(1 - top, N - m + 1):
        try:
            twisted = Finite(frobenius(s.xi, i))
        except NoRoot:
            continue
        if points_meet(s.eta, twisted):
            raise InputError(f"eta equals xi^({i})")
    removed = Divisor([(Finite(frobenius(s.xi, -i)), 1) for i in range(m)])
    space = rr_basis(s.E.over(K) + D1.over(K) - removed, K)
    if not space:
        raise InputError("No nonzero psi exists for these parameters")
    iterates = drinfeld_iterates(special_function(s), space[0], N)
    return rank_over_K(iterates, K)


def cohomology_vanishes(
    s: Shtuka, alphas: Sequence[PrincipalPart]
) -> bool:
    """
    Check the vanishing and uniqueness statements at genus zero.

    H^0(O(E)) is zero, every alpha has exactly one lifting into
    H^0(O(E + D)), liftings are additive, and psi_alpha(xi) is nonzero
    when xi lies outside E + D.

    :param s: Nondegenerate shtuka
    :type s: Shtuka
    :param alphas: Nonzero principal parts along D
    :type alphas: Sequence
    :returns: whether every statement holds
    :rtype: bool
    """
    if rr_basis(s.E, s.field):
        return False
    rows, _, _ = lifting_matrix(s)
    if rank_over_k(rows, s.field) != s.D.degree:
        return False
    lifts = [psi_lift(s, alpha) for alpha in alphas]
    for i in range(1, len(alphas)):
        total = alphas[0] + alphas[i]
        if not total.is_zero() and psi_lift(s, total) != lifts[0] + lifts[i]:
            return False
    outside = supported_away(Divisor.point(Finite(s.xi)), s.E + s.D)
    if outside:
        return all(not rf_eval(psi, s.xi).is_zero() for psi in lifts)
    return True


def tau_identity(
    field: FieldDesc,
    N: int,
    c: Any,
    method: HypMethod = HypMethod.ENUMERATE,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> Tuple[KElem, KElem]:
    """
    Both sides of c^-1 tau^(q^N - 1) = Hyp value at t = tau^(q-1).

    For N < 0 the left side is replaced by its q^|N|-th power
    c^(-Q) tau^(1 - Q), Q = q^|N|, which lies in K.

    :param field: Base field F_q
    :type field: FieldDesc
    :param N: Nonzero integer
    :type N: int
    :param c: Nonzero element of F_q
    :type c: FieldElem
    :returns: (left side, right side)
    :rtype: tuple
    """
    K = k_field(field, field)
    tau = K.tau
    q = field.order
    case = simple_example_case(field, N, c)
    value = hyp(case.D, case.alpha, case.beta, case.E, method, max_enum)
    rhs = K.coerce(rf_eval(value, tau ** (q - 1)))
    c = K.coerce(field.coerce(c))
    if N > 0:
        lhs = c ** (-1) * tau ** (q**N - 1)
    else:
        Q = q ** abs(N)
        lhs = c ** (-Q) * tau ** (1 - Q)
    return lhs, rhs
