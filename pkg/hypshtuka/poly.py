"""Dense univariate polynomials over a coefficient field."""
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
from typing import Iterable
from typing import List
from typing import Tuple

from hypshtuka.errors import ComputationError


class Poly:
    """
    Immutable polynomial with coefficients in ascending degree order.

    :ivar field: Coefficient field
    :vartype field: CoefficientField
    :ivar coeffs: Coefficients c_0, c_1, ... without trailing zeros
    :vartype coeffs: tuple
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Any, coeffs: Iterable[Any] = ()) -> None:
        """
        Create a polynomial, trimming trailing zero coefficients.

        :param field: Coefficient field
        :type field: CoefficientField
        :param coeffs: Coefficients in ascending degree order
        :type coeffs: Iterable
        """
        values = list(coeffs)
        zero = field.zero
        while values and values[-1] == zero:
            values.pop()
        self.field = field
        self.coeffs: Tuple[Any, ...] = tuple(values)

    @classmethod
    def zero(cls, field: Any) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Any) -> "Poly":
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, field: Any, value: Any) -> "Poly":
        return cls(field, (field.coerce(value),))

    @classmethod
    def monomial(cls, field: Any, degree: int, value: Any = None) -> "Poly":
        """
        Return value * x^degree.

        :param field: Coefficient field
        :type field: CoefficientField
        :param degree: Exponent
        :type degree: int
        :param value: Coefficient, one if omitted
        :type value: Any
        :returns: monomial
        :rtype: Poly
        """
        lead = field.one if value is None else field.coerce(value)
        return cls(field, [field.zero] * degree + [lead])

    @classmethod
    def linear(cls, field: Any, root: Any) -> "Poly":
        """Return x - root."""
        return cls(field, (-field.coerce(root), field.one))

    @classmethod
    def from_ints(cls, field: Any, values: Iterable[int]) -> "Poly":
        return cls(field, [field.coerce(v) for v in values])

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Any:
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.format('x')})"

    def __str__(self) -> str:
        return self.format("x")

    def sort_key(self) -> Tuple:
        return (
            self.degree,
            tuple(self.field.element_key(c) for c in reversed(self.coeffs)),
        )

    def format(self, var: str) -> str:
        """
        Canonical text with descending powers, e.g. ``t^2+t+1``.

        :param var: Variable name
        :type var: str
        :returns: text
        :rtype: str
        """
        if not self.coeffs:
            return "0"
        terms = []
        one = self.field.one
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == self.field.zero:
                continue
            if k == 0:
                monomial = ""
            elif k == 1:
                monomial = var
            else:
                monomial = f"{var}^{k}"
            text = self.field.format_element(c)
            if not monomial:
                terms.append(text)
            elif c == one:
                terms.append(monomial)
            else:
                if not _is_atomic(text):
                    text = f"({text})"
                terms.append(f"{text}*{monomial}")
        return "+".join(terms)

    def _coerce_operand(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly(self.field, (self.field.coerce(other),))

    def __add__(self, other: Any) -> "Poly":
        other = self._coerce_operand(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] = result[i] + c
        return Poly(self.field, result)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Poly":
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._coerce_operand(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(self.field.coerce(other))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field, ())
        zero = self.field.zero
        result = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                result[i + j] = result[i + j] + x * y
        return Poly(self.field, result)

    __rmul__ = __mul__

    def scale(self, value: Any) -> "Poly":
        return Poly(self.field, [c * value for c in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, [self.field.zero] * k + list(self.coeffs))

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("Negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __divmod__(self, other: "Poly") -> Tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        zero = self.field.zero
        remainder = list(self.coeffs)
        d = len(other.coeffs) - 1
        if len(remainder) - 1 < d:
            return Poly(self.field, ()), self
        lead = other.coeffs[-1]
        inverse = None if lead == self.field.one else self.field.one / lead
        quotient = [zero] * (len(remainder) - d)
        divisor = other.coeffs
        for k in range(len(remainder) - 1 - d, -1, -1):
            c = remainder[k + d]
            if c == zero:
                continue
            if inverse is not None:
                c = c * inverse
            quotient[k] = c
            for j in range(d + 1):
                remainder[k + j] = remainder[k + j] - c * divisor[j]
        return Poly(self.field, quotient), Poly(self.field, remainder[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def exquo(self, other: "Poly") -> "Poly":
        """
        Exact quotient.

        :param other: Divisor
        :type other: Poly
        :returns: quotient
        :rtype: Poly
        :raises ComputationError: When the division leaves a remainder
        """
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise ComputationError("Inexact polynomial division")
        return quotient

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == self.field.one:
            return self
        return self.scale(self.field.one / self.coeffs[-1])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor, zero when both are zero."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, (a % b).monic()
        return a.monic()

    def xgcd(self, other: "Poly") -> Tuple["Poly", "Poly", "Poly"]:
        """
        Extended Euclid.

        :returns: (g, s, u) with s*self + u*other = g and g monic
        :rtype: tuple
        """
        r0, r1 = self, other
        s0, s1 = Poly.one(self.field), Poly.zero(self.field)
        u0, u1 = Poly.zero(self.field), Poly.one(self.field)
        while not r1.is_zero():
            quotient, remainder = divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, s0 - quotient * s1
            u0, u1 = u1, u0 - quotient * u1
        if r0.is_zero():
            return r0, s0, u0
        inverse = self.field.one / r0.leading
        return r0.scale(inverse), s0.scale(inverse), u0.scale(inverse)

    def inverse_mod(self, modulus: "Poly") -> "Poly":
        g, s, _ = self.xgcd(modulus)
        if not g.is_one():
            raise ComputationError("Polynomial is not invertible modulo")
        return s % modulus

    def powmod(self, exponent: int, modulus: "Poly") -> "Poly":
        result = Poly.one(self.field) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = (result * base) % modulus
            exponent >>= 1
            if exponent:
                base = (base * base) % modulus
        return result

    def __call__(self, x: Any) -> Any:
        """Horner evaluation at an element of the same field."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_in(self, field: Any, x: Any) -> Any:
        """
        Evaluate at x after mapping the coefficients into field.

        :param field: Target field containing x
        :type field: CoefficientField
        :param x: Evaluation point
        :type x: Any
        :returns: value
        :rtype: Any
        """
        acc = field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + field.coerce(c)
        return acc

    def derivative(self) -> "Poly":
        return Poly(
            self.field,
            [
                self.coeffs[k] * self.field.coerce(k)
                for k in range(1, len(self.coeffs))
            ],
        )

    def map_coefficients(
        self, function: Callable[[Any], Any], field: Any = None
    ) -> "Poly":
        target = self.field if field is None else field
        return Poly(target, [function(c) for c in self.coeffs])

    def change_field(self, field: Any) -> "Poly":
        if field is self.field:
            return self
        return Poly(field, [field.coerce(c) for c in self.coeffs])

    def twist_power(self, k: int) -> "Poly":
        """
        Return self^(q^k) in characteristic p, q the base field order.

        :param k: Nonnegative exponent
        :type k: int
        :returns: q^k-th power
        :rtype: Poly
        """
        if k == 0 or not self.coeffs:
            return self
        step = self.field.base.order ** k
        zero = self.field.zero
        result = [zero] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            if c != zero:
                result[i * step] = self.field.frobenius(c, k)
        return Poly(self.field, result)

    def truncate(self, n: int) -> "Poly":
        """Reduce modulo x^n."""
        return Poly(self.field, self.coeffs[:n])

    def reverse(self, n: int) -> "Poly":
        """Return x^n * self(1/x) for n >= degree."""
        padded = list(self.coeffs) + [self.field.zero] * (
            n + 1 - len(self.coeffs)
        )
        return Poly(self.field, reversed(padded))

    def series_inverse(self, n: int) -> "Poly":
        """
        Inverse modulo x^n of a polynomial with nonzero constant term.

        :param n: Precision
        :type n: int
        :returns: inverse power series truncated below x^n
        :rtype: Poly
        """
        c0 = self.coefficient(0)
        if c0 == self.field.zero:
            raise ZeroDivisionError("Series is not invertible")
        inverse_c0 = self.field.one / c0
        result: List[Any] = []
        for k in range(n):
            acc = self.field.one if k == 0 else self.field.zero
            for j in range(1, min(k, self.degree) + 1):
                acc = acc - self.coeffs[j] * result[k - j]
            result.append(acc * inverse_c0)
        return Poly(self.field, result)

    def valuation_at(self, factor: "Poly") -> int:
        """Multiplicity of factor as a divisor of self (self nonzero)."""
        count = 0
        current = self
        while True:
            quotient, remainder = divmod(current, factor)
            if not remainder.is_zero():
                return count
            count += 1
            current = quotient


def _is_atomic(text: str) -> bool:
    return all(ch.isalnum() or ch in "^_" for ch in text)
