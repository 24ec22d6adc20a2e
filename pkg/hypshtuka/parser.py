"""Text grammars for fields, elements, functions and divisors."""
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
import re
from tokenize import TokenError
from typing import Any
from typing import Dict
from typing import Optional

import sympy
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations

from hypshtuka.divisor import Divisor
from hypshtuka.divisor import closed_point
from hypshtuka.errors import HypShtukaError
from hypshtuka.errors import ParseError
from hypshtuka.fields import FieldDesc
from hypshtuka.fields import KElem
from hypshtuka.fields import KField
from hypshtuka.fields import field_make
from hypshtuka.fields import frobenius
from hypshtuka.fields import prime_power
from hypshtuka.func import RatFunc
from hypshtuka.hyp import PRESETS
from hypshtuka.hyp import preset
from hypshtuka.model.point import INFINITY
from hypshtuka.model.point import Finite
from hypshtuka.poly import Poly
from hypshtuka.rr import PrincipalPart
from hypshtuka.rr import principal_part_of

TRANSFORMATIONS = standard_transformations + (convert_xor,)
SYMBOLS: Dict[str, sympy.Symbol] = {
    name: sympy.Symbol(name) for name in ("t", "tau", "u", "xi")
}

FIELD_SPEC = re.compile(
    r"^\s*(?:q\s*=\s*)?(?P<p>\d+)(?:\s*\^\s*(?P<m>\d+))?"
    r"\s*(?:,\s*modulus\s*=\s*(?P<modulus>.+?))?\s*$"
)
DIVISOR_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<k>\d+)\s*\*\s*)?\[(?P<point>[^\]]*)\]\s*"
)
TWISTED_XI = re.compile(r"^\s*xi\s*(?:\^\s*\(\s*(?P<k>-?\d+)\s*\))?\s*$")


def _expression(text: str) -> sympy.Expr:
    try:
        return parse_expr(
            text,
            local_dict=dict(SYMBOLS),
            transformations=TRANSFORMATIONS,
            evaluate=False,
        )
    except (SyntaxError, TypeError, ValueError, NameError, TokenError) as e:
        raise ParseError(f"Cannot parse '{text}': {e}") from e


def parse_field_spec(text: str) -> FieldDesc:
    """
    Field from ``q=<p>^<m>[,modulus=<poly in u>]`` or a bare order.

    :param text: Field specification, e.g. ``q=2^2,modulus=u^2+u+1``
    :type text: str
    :returns: the field
    :rtype: FieldDesc
    :raises ParseError: For malformed text
    """
    match = FIELD_SPEC.match(text)
    if match is None:
        raise ParseError(f"Malformed field specification '{text}'")
    p = int(match.group("p"))
    m = int(match.group("m") or 1)
    if match.group("m") is None and not sympy.isprime(p):
        p, m = prime_power(p)
    modulus = None
    if match.group("modulus"):
        expr = _expression(match.group("modulus"))
        try:
            coeffs = sympy.Poly(expr, SYMBOLS["u"]).all_coeffs()
        except sympy.PolynomialError as e:
            raise ParseError(f"Modulus must be a polynomial in u: {e}") from e
        for c in coeffs:
            if not isinstance(c, sympy.Integer):
                raise ParseError(f"Modulus coefficient {c} is not an integer")
        modulus = tuple(int(c) % p for c in reversed(coeffs))
    return field_make(p, m, modulus)


class _Evaluator:
    """Evaluate a parsed expression as a rational function over a field."""

    def __init__(self, field: Any, xi: Optional[KElem] = None) -> None:
        self.field = field
        self.xi = xi

    def constant(self, value: Any) -> RatFunc:
        return RatFunc.constant(self.field, value)

    def symbol(self, name: str) -> RatFunc:
        field = self.field
        if name == "t":
            return RatFunc.t(field)
        if name == "u":
            const = field.const if isinstance(field, KField) else field
            return self.constant(const.gen)
        if name == "tau":
            if not isinstance(field, KField):
                raise ParseError(f"tau is not defined over {field!r}")
            return self.constant(field.tau)
        if name == "xi":
            if self.xi is None:
                raise ParseError("xi is not bound")
            return self.constant(self.xi)
        raise ParseError(f"Unknown symbol '{name}'")

    def __call__(self, node: sympy.Basic) -> RatFunc:
        if isinstance(node, sympy.Integer):
            return self.constant(int(node))
        if isinstance(node, sympy.Rational):
            return self.constant(int(node.p)) / self.constant(int(node.q))
        if isinstance(node, sympy.Symbol):
            return self.symbol(node.name)
        if isinstance(node, sympy.Add):
            result = self(node.args[0])
            for arg in node.args[1:]:
                result = result + self(arg)
            return result
        if isinstance(node, sympy.Mul):
            result = self(node.args[0])
            for arg in node.args[1:]:
                result = result * self(arg)
            return result
        if isinstance(node, sympy.Pow):
            exponent = node.args[1]
            if not isinstance(exponent, sympy.Integer):
                raise ParseError(f"Exponent {exponent} is not an integer")
            return self(node.args[0]) ** int(exponent)
        raise ParseError(f"Unsupported expression {node}")


def parse_ratfunc(
    text: str, field: Any, xi: Optional[KElem] = None
) -> RatFunc:
    """
    Rational function in t over F_q or K.

    :param text: Expression in ``t``, ``tau``, ``u``, ``xi`` and integers
    :type text: str
    :param field: Coefficient field
    :type field: FieldDesc or KField
    :param xi: Value bound to ``xi``
    :type xi: KElem or None
    :returns: the function
    :rtype: RatFunc
    :raises ParseError: For malformed text
    """
    try:
        return _Evaluator(field, xi)(_expression(text))
    except ZeroDivisionError as e:
        raise ParseError(f"Division by zero in '{text}'") from e


def parse_element(text: str, field: Any, xi: Optional[KElem] = None) -> Any:
    """
    Element of F_q or K written without t.

    :returns: FieldElem or KElem
    :rtype: Any
    :raises ParseError: When the expression depends on t
    """
    f = parse_ratfunc(text, field, xi)
    if not f.is_constant():
        raise ParseError(f"'{text}' depends on t")
    return f.num.coefficient(0)


def parse_kelem(text: str, K: KField, xi: Optional[KElem] = None) -> KElem:
    return K.coerce(parse_element(text, K, xi))


def _point(text: str, field: Any, xi: Optional[KElem]) -> Any:
    text = text.strip()
    if text == "inf":
        return INFINITY
    twisted = TWISTED_XI.match(text)
    if twisted is not None:
        if xi is None:
            raise ParseError("xi is not bound")
        return Finite(frobenius(xi, int(twisted.group("k") or 0)))
    f = parse_ratfunc(text, field, xi)
    if f.is_constant():
        x = f.num.coefficient(0)
        if isinstance(x, KElem) and x.is_constant():
            x = x.constant_value()
        return Finite(x)
    if not f.is_polynomial():
        raise ParseError(f"Point [{text}] is neither a value nor a polynomial")
    poly = f.num
    if isinstance(field, KField):
        if not all(c.is_constant() for c in poly.coeffs):
            raise ParseError(f"[{text}] is not defined over F_q")
        poly = poly.map_coefficients(lambda c: c.constant_value(), field.const)
    return closed_point(poly)


def parse_divisor(
    text: str, field: Any, xi: Optional[KElem] = None
) -> Divisor:
    """
    Divisor written as terms ``k*[point]`` joined by ``+`` and ``-``.

    Points are ``inf``, an element of F_q or K, ``xi^(k)`` or a monic
    irreducible polynomial in t over F_q. ``0`` is the zero divisor.

    :param text: Divisor text, e.g. ``-2*[1] + [t^2+t+1] + [xi^(1)]``
    :type text: str
    :param field: Field of the coordinates
    :type field: FieldDesc or KField
    :param xi: Value bound to ``xi``
    :type xi: KElem or None
    :returns: the divisor
    :rtype: Divisor
    :raises ParseError: For malformed text
    """
    if text.strip() == "0":
        return Divisor.zero()
    terms = []
    position = 0
    while position < len(text):
        match = DIVISOR_TERM.match(text, position)
        if match is None or match.end() == position:
            raise ParseError(f"Malformed divisor at '{text[position:]}'")
        if match.group("sign") is None and terms:
            raise ParseError(f"Missing sign before '{match.group(0)}'")
        k = int(match.group("k") or 1)
        if match.group("sign") == "-":
            k = -k
        try:
            terms.append((_point(match.group("point"), field, xi), k))
        except ParseError:
            raise
        except HypShtukaError as e:
            raise ParseError(f"Bad point [{match.group('point')}]: {e}") from e
        position = match.end()
    if not terms:
        raise ParseError(f"Empty divisor '{text}'")
    return Divisor(terms)


def format_value(value: Any) -> str:
    """Canonical text of any value the library returns."""
    if isinstance(value, Poly):
        return value.format("t")
    if hasattr(value, "format") and callable(value.format):
        return value.format()
    return str(value)


def parse_principal_part(
    text: str, D: Divisor, field: Any, xi: Optional[KElem] = None
) -> PrincipalPart:
    """
    Principal part along D of a preset or of a rational function.

    :param text: ``alpha_inf``, ``alpha_1``, ``alpha_0`` or an expression
    :type text: str
    :param D: Conductor
    :type D: Divisor
    :param field: Coefficient field
    :type field: FieldDesc or KField
    :returns: the principal part
    :rtype: PrincipalPart
    :raises ParseError: For malformed text
    """
    name = text.strip()
    if name in PRESETS:
        return preset(name, D, field)
    return principal_part_of(parse_ratfunc(name, field, xi), D)
