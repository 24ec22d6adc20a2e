"""Exact arithmetic in finite fields F_{p^m} and in K = F_{q'}(tau)."""
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
import itertools
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

from sympy import factorint
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from hypshtuka import logger_factory
from hypshtuka.errors import BudgetExceeded
from hypshtuka.errors import FieldMismatch
from hypshtuka.errors import InputError
from hypshtuka.errors import ModulusRequired
from hypshtuka.errors import NoRoot
from hypshtuka.errors import NotPrime
from hypshtuka.errors import ReducibleModulus
from hypshtuka.interface.coefficient_field import CoefficientField
from hypshtuka.poly import Poly

DEFAULT_MAX_ENUM = 2**20
TABLE_LIMIT = 64
MAX_ORDER = 2**16

logger = logger_factory.logger_factory.get_logger(__name__)


class FieldDesc(CoefficientField):
    """
    Finite field F_{p^m} = F_p[u]/(modulus).

    Elements are packed as integers whose base-p digits are the
    coefficients of 1, u, ..., u^(m-1). Multiplication goes through
    exponent and logarithm tables over a primitive element.

    :ivar p: Characteristic
    :vartype p: int
    :ivar m: Extension degree over F_p
    :vartype m: int
    :ivar modulus: Monic modulus coefficients in ascending order
    :vartype modulus: tuple
    """

    def __init__(self, p: int, m: int, modulus: Tuple[int, ...]) -> None:
        self.p = p
        self.m = m
        self.modulus = modulus
        self.order = p**m
        self._exp: List[int] = []
        self._log: Dict[int, int] = {}
        self._roots: Dict["FieldDesc", "FieldElem"] = {}
        self._build_tables()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldDesc):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (
            other.p,
            other.m,
            other.modulus,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}[{self._modulus_text()}]"

    def _modulus_text(self) -> str:
        terms = []
        for k in range(self.m, -1, -1):
            c = self.modulus[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return "+".join(terms)

    @property
    def q(self) -> int:
        return self.order

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def base(self) -> "FieldDesc":
        return self

    @property
    def gen(self) -> "FieldElem":
        """Class of u."""
        return FieldElem(self, self._reduce([0, 1]))

    def _digits(self, value: int) -> List[int]:
        digits = []
        for _ in range(self.m):
            value, digit = divmod(value, self.p)
            digits.append(digit)
        return digits

    def _pack(self, digits: Sequence[int]) -> int:
        value = 0
        for digit in reversed(digits):
            value = value * self.p + digit % self.p
        return value

    def _reduce(self, digits: Sequence[int]) -> int:
        work = [d % self.p for d in digits]
        m = self.m
        for k in range(len(work) - 1, m - 1, -1):
            c = work[k]
            if c == 0:
                continue
            for j in range(m + 1):
                work[k - m + j] = (work[k - m + j] - c * self.modulus[j]) % (
                    self.p
                )
        return self._pack(work[:m])

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        product = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    product[i + j] += x * y
        return self._reduce(product)

    def _pow_slow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul_slow(result, base)
            k >>= 1
            base = self._mul_slow(base, base)
        return result

    def _build_tables(self) -> None:
        n = self.order - 1
        primes = list(factorint(n)) if n > 1 else []
        for candidate in range(1, self.order):
            if n > 1 and candidate == 1:
                continue
            if all(self._pow_slow(candidate, n // r) != 1 for r in primes):
                break
        else:  # pragma: no cover
            raise ReducibleModulus(f"No primitive element in {self!r}")
        value = 1
        for k in range(n):
            self._exp.append(value)
            self._log[value] = k
            value = self._mul_slow(value, candidate)

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        return self._pack(
            [x + y for x, y in zip(self._digits(a), self._digits(b))]
        )

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        return self._pack([-x for x in self._digits(a)])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("Inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def power(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("Negative power of zero")
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def from_int(self, n: int) -> "FieldElem":
        return FieldElem(self, n % self.p)

    def from_coeffs(self, coeffs: Sequence[int]) -> "FieldElem":
        """
        Element with the given coefficients of 1, u, u^2, ...

        :param coeffs: Coefficients in ascending order, any length
        :type coeffs: Sequence[int]
        :returns: reduced element
        :rtype: FieldElem
        """
        return FieldElem(self, self._reduce(list(coeffs) or [0]))

    def elements(self) -> List["FieldElem"]:
        """All elements ordered by packed value."""
        return [FieldElem(self, v) for v in range(self.order)]

    def nonzero_elements(self) -> List["FieldElem"]:
        return [FieldElem(self, v) for v in range(1, self.order)]

    def frob_p(self, x: "FieldElem", k: int) -> "FieldElem":
        """Return x^(p^k); negative k inverts the p-power map."""
        return FieldElem(
            self, self.power(x.value, self.p ** (k % self.m))
        )

    def coerce(self, value: Any) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.desc is self or value.desc == self:
                return value
            return embed(value, self)
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, KElem) and value.is_constant():
            return self.coerce(value.constant_value())
        raise FieldMismatch(f"Cannot coerce {value!r} into {self!r}")

    def frobenius(self, x: Any, n: int) -> "FieldElem":
        return self.coerce(x)

    def is_base_rational(self, x: Any) -> bool:
        return True

    def contains(self, x: "FieldElem", sub: "FieldDesc") -> bool:
        """Tell whether x lies in the subfield of order sub.order."""
        return x ** sub.order == x

    def format_element(self, x: Any) -> str:
        return self.coerce(x).format()

    def element_key(self, x: Any) -> Tuple:
        return (self.coerce(x).value,)

    def subfield_degree(self, sub: "FieldDesc") -> int:
        """
        Degree [self : sub].

        :raises FieldMismatch: When sub does not embed into self
        """
        if sub.p != self.p or self.m % sub.m != 0:
            raise FieldMismatch(f"{sub!r} is not a subfield of {self!r}")
        return self.m // sub.m

    def embedding_root(self, sub: "FieldDesc") -> "FieldElem":
        """Least root of sub's modulus in this field, the image of sub.gen."""
        if sub in self._roots:
            return self._roots[sub]
        self.subfield_degree(sub)
        modulus = Poly.from_ints(self, sub.modulus)
        for x in self.elements():
            if modulus(x).value == 0:
                self._roots[sub] = x
                return x
        raise FieldMismatch(  # pragma: no cover
            f"{sub!r} has no root in {self!r}"
        )


class FieldElem:
    """
    Element of a finite field.

    :ivar desc: Field the element belongs to
    :vartype desc: FieldDesc
    :ivar value: Packed base-p digits
    :vartype value: int
    """

    __slots__ = ("desc", "value")

    def __init__(self, desc: FieldDesc, value: int) -> None:
        self.desc = desc
        self.value = value

    @property
    def field(self) -> FieldDesc:
        return self.desc

    @property
    def coeffs(self) -> List[int]:
        """Coefficients of 1, u, ..., u^(m-1)."""
        return self.desc._digits(self.value)

    def _other(self, other: Any) -> Optional[int]:
        if isinstance(other, FieldElem):
            if other.desc is self.desc or other.desc == self.desc:
                return other.value
            raise FieldMismatch(
                f"Elements of {self.desc!r} and {other.desc!r} do not mix"
            )
        if isinstance(other, int):
            return self.desc.from_int(other).value
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, KElem):
            return NotImplemented
        try:
            value = self._other(other)
        except FieldMismatch:
            return False
        if value is None:
            return NotImplemented
        return self.value == value

    def __hash__(self) -> int:
        return hash((self.desc.p, self.desc.m, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: Any) -> "FieldElem":
        value = self._other(other)
        if value is None:
            return NotImplemented
        return FieldElem(self.desc, self.desc.add(self.value, value))

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.desc, self.desc.neg(self.value))

    def __sub__(self, other: Any) -> "FieldElem":
        value = self._other(other)
        if value is None:
            return NotImplemented
        return FieldElem(
            self.desc, self.desc.add(self.value, self.desc.neg(value))
        )

    def __rsub__(self, other: Any) -> "FieldElem":
        return (-self) + other

    def __mul__(self, other: Any) -> "FieldElem":
        value = self._other(other)
        if value is None:
            return NotImplemented
        return FieldElem(self.desc, self.desc.mul(self.value, value))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        return FieldElem(self.desc, self.desc.inv(self.value))

    def __truediv__(self, other: Any) -> "FieldElem":
        value = self._other(other)
        if value is None:
            return NotImplemented
        return FieldElem(
            self.desc, self.desc.mul(self.value, self.desc.inv(value))
        )

    def __rtruediv__(self, other: Any) -> "FieldElem":
        return self.inverse() * other

    def __pow__(self, k: int) -> "FieldElem":
        return FieldElem(self.desc, self.desc.power(self.value, k))

    def format(self) -> str:
        """Text as a polynomial in u, e.g. ``u+1``."""
        if self.desc.m == 1:
            return str(self.value)
        return Poly(_PrimeDigits(self.desc.p), self.coeffs).format("u")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FieldElem({self.format()} in {self.desc!r})"

    def sort_key(self) -> Tuple:
        return (self.value,)


class _PrimeDigits(CoefficientField):
    """Integers mod p, only used to print digit vectors."""

    def __init__(self, p: int) -> None:
        self.p = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def base(self) -> Any:
        return self

    def coerce(self, value: Any) -> int:
        return int(value) % self.p

    def frobenius(self, x: Any, n: int) -> int:
        return x

    def is_base_rational(self, x: Any) -> bool:
        return True

    def format_element(self, x: Any) -> str:
        return str(x)

    def element_key(self, x: Any) -> Tuple:
        return (x,)


def embed(x: FieldElem, target: FieldDesc) -> FieldElem:
    """
    Image of x under the embedding of its field into target.

    :param x: Element of a subfield of target
    :type x: FieldElem
    :param target: Larger field
    :type target: FieldDesc
    :returns: embedded element
    :rtype: FieldElem
    :raises FieldMismatch: When x.desc does not embed into target
    """
    root = target.embedding_root(x.desc)
    acc = target.zero
    for digit in reversed(x.coeffs):
        acc = acc * root + target.from_int(digit)
    return acc


def default_modulus(p: int, m: int) -> Tuple[int, ...]:
    """
    Smallest monic irreducible of degree m over F_p in lexicographic order.

    :param p: Characteristic
    :type p: int
    :param m: Degree
    :type m: int
    :returns: ascending coefficients
    :rtype: tuple
    :raises ModulusRequired: When p^m exceeds the built-in table
    """
    if m == 1:
        return (0, 1)
    if p**m > TABLE_LIMIT:
        raise ModulusRequired(f"No built-in modulus for {p}^{m}")
    for tail in itertools.product(range(p), repeat=m):
        descending = [1] + list(tail)
        if gf_irreducible_p(descending, p, ZZ):
            return tuple(reversed(descending))
    raise ModulusRequired(  # pragma: no cover
        f"No irreducible polynomial for {p}^{m}"
    )


@lru_cache(maxsize=None)
def _field_make(p: int, m: int, modulus: Tuple[int, ...]) -> FieldDesc:
    logger.debug(f"Building tables for F_{p}^{m} modulo {modulus}")
    return FieldDesc(p, m, modulus)


def field_make(
    p: int, m: int = 1, modulus: Optional[Sequence[int]] = None
) -> FieldDesc:
    """
    Create or reuse the finite field F_{p^m}.

    :param p: Characteristic, must be prime
    :type p: int
    :param m: Extension degree
    :type m: int
    :param modulus: Monic modulus coefficients in ascending order
    :type modulus: Sequence[int] or None
    :returns: field descriptor
    :rtype: FieldDesc
    :raises NotPrime: When p is not prime
    :raises ReducibleModulus: When modulus is not monic irreducible of degree m
    """
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise InputError(f"Extension degree must be positive, got {m}")
    if p**m > MAX_ORDER:
        raise InputError(f"Field of order {p}^{m} is too large")
    if modulus is None:
        coeffs = default_modulus(p, m)
    else:
        coeffs = tuple(int(c) % p for c in modulus)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise ReducibleModulus(
                f"Modulus must be monic of degree {m}, got {coeffs}"
            )
        if not gf_irreducible_p(list(reversed(coeffs)), p, ZZ):
            raise ReducibleModulus(f"Modulus {coeffs} is reducible mod {p}")
    return _field_make(p, m, coeffs)


def prime_power(q: int) -> Tuple[int, int]:
    """
    Split q = p^m.

    :raises NotPrime: When q is not a prime power
    """
    factors = factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotPrime(f"{q} is not a prime power")
    ((p, m),) = factors.items()
    return int(p), int(m)


def field_of_order(q: int) -> FieldDesc:
    """Field of order q with the built-in modulus."""
    p, m = prime_power(q)
    return field_make(p, m)


class KField(CoefficientField):
    """
    Coefficient field K = F_{q'}(tau) over the base field F_q.

    :ivar const: Constant field F_{q'}
    :vartype const: FieldDesc
    """

    def __init__(self, const: FieldDesc, base: FieldDesc) -> None:
        const.subfield_degree(base)
        self.const = const
        self._base = base
        self._e = base.m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KField):
            return NotImplemented
        return self.const == other.const and self._base == other._base

    def __hash__(self) -> int:
        return hash((self.const, self._base, "tau"))

    def __repr__(self) -> str:
        return f"{self.const!r}(tau) over {self._base!r}"

    @property
    def zero(self) -> "KElem":
        return KElem(self, Poly.zero(self.const), Poly.one(self.const))

    @property
    def one(self) -> "KElem":
        return KElem(self, Poly.one(self.const), Poly.one(self.const))

    @property
    def tau(self) -> "KElem":
        return KElem(
            self, Poly.monomial(self.const, 1), Poly.one(self.const)
        )

    @property
    def characteristic(self) -> int:
        return self.const.p

    @property
    def base(self) -> FieldDesc:
        return self._base

    def make(self, num: Poly, den: Optional[Poly] = None) -> "KElem":
        """
        Reduced fraction num/den.

        :param num: Numerator over the constant field
        :type num: Poly
        :param den: Denominator, one if omitted
        :type den: Poly or None
        :returns: canonical element
        :rtype: KElem
        """
        if den is None or den.is_one():
            return KElem(self, num, Poly.one(self.const))
        if den.is_zero():
            raise ZeroDivisionError("Zero denominator in K")
        if num.is_zero():
            return self.zero
        g = num.gcd(den)
        if not g.is_one():
            num, den = num // g, den // g
        lead = den.leading
        if lead != self.const.one:
            inverse = self.const.one / lead
            num, den = num.scale(inverse), den.scale(inverse)
        return KElem(self, num, den)

    def constant(self, value: Any) -> "KElem":
        return KElem(
            self, Poly.constant(self.const, value), Poly.one(self.const)
        )

    def coerce(self, value: Any) -> "KElem":
        if isinstance(value, KElem):
            if value.field is self or value.field == self:
                return value
            if value.is_constant():
                return self.constant(value.constant_value())
            raise FieldMismatch(f"Cannot coerce {value!r} into {self!r}")
        if isinstance(value, (int, FieldElem)):
            return self.constant(self.const.coerce(value))
        raise FieldMismatch(f"Cannot coerce {value!r} into {self!r}")

    def _coefficient_map(self, x: "KElem", k: int) -> "KElem":
        exponent = self._e * k

        def twist(c: FieldElem) -> FieldElem:
            return self.const.frob_p(c, exponent)

        return KElem(
            self, x.num.map_coefficients(twist), x.den.map_coefficients(twist)
        )

    def frobenius(self, x: Any, n: int) -> "KElem":
        x = self.coerce(x)
        if n == 0:
            return x
        step = self._base.order ** abs(n)
        mapped = self._coefficient_map(x, n)
        if n > 0:
            return KElem(
                self,
                _spread(mapped.num, step),
                _spread(mapped.den, step),
            )
        num = _compress(mapped.num, step)
        den = _compress(mapped.den, step)
        if num is None or den is None:
            raise NoRoot(
                f"{self.format_element(x)} is not a {step}-th power in K"
            )
        return KElem(self, num, den)

    def is_base_rational(self, x: Any) -> bool:
        x = self.coerce(x)
        if not x.is_constant():
            return False
        return self.const.contains(x.constant_value(), self._base)

    def format_element(self, x: Any) -> str:
        return self.coerce(x).format()

    def element_key(self, x: Any) -> Tuple:
        x = self.coerce(x)
        return (x.den.sort_key(), x.num.sort_key())


def _spread(poly: Poly, step: int) -> Poly:
    zero = poly.field.zero
    if poly.degree <= 0:
        return poly
    values = [zero] * (poly.degree * step + 1)
    for i, c in enumerate(poly.coeffs):
        values[i * step] = c
    return Poly(poly.field, values)


def _compress(poly: Poly, step: int) -> Optional[Poly]:
    zero = poly.field.zero
    values = []
    for i, c in enumerate(poly.coeffs):
        if i % step == 0:
            values.append(c)
        elif c != zero:
            return None
    return Poly(poly.field, values)


@lru_cache(maxsize=None)
def k_field(const: FieldDesc, base: FieldDesc) -> KField:
    """Shared K = const(tau) over base."""
    return KField(const, base)


class KElem:
    """
    Element num/den of F_{q'}(tau), reduced with monic denominator.

    :ivar field: Field the element belongs to
    :vartype field: KField
    :ivar num: Numerator in tau
    :vartype num: Poly
    :ivar den: Monic denominator in tau
    :vartype den: Poly
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: KField, num: Poly, den: Poly) -> None:
        self.field = field
        self.num = num
        self.den = den

    def _other(self, other: Any) -> Optional["KElem"]:
        if isinstance(other, KElem):
            if other.field is self.field or other.field == self.field:
                return other
            return self.field.coerce(other)
        if isinstance(other, (int, FieldElem)):
            return self.field.coerce(other)
        return None

    def __eq__(self, other: object) -> bool:
        try:
            value = self._other(other)
        except FieldMismatch:
            return False
        if value is None:
            return NotImplemented
        return self.num == value.num and self.den == value.den

    def __hash__(self) -> int:
        if self.is_constant():
            c = self.constant_value()
            return hash((c.desc.p, c.desc.m, c.value))
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> FieldElem:
        """
        Value of a constant element in the constant field.

        :raises FieldMismatch: When the element depends on tau
        """
        if not self.is_constant():
            raise FieldMismatch(f"{self.format()} is not constant")
        return self.num.coefficient(0)

    def __add__(self, other: Any) -> "KElem":
        b = self._other(other)
        if b is None:
            return NotImplemented
        if self.den.is_one() or b.den.is_one():
            c, f = (self, b) if self.den.is_one() else (b, self)
            return KElem(self.field, c.num * f.den + f.num, f.den)
        if self.den == b.den:
            return self.field.make(self.num + b.num, self.den)
        return self.field.make(
            self.num * b.den + b.num * self.den, self.den * b.den
        )

    __radd__ = __add__

    def __neg__(self) -> "KElem":
        return KElem(self.field, -self.num, self.den)

    def __sub__(self, other: Any) -> "KElem":
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, other: Any) -> "KElem":
        return (-self) + other

    def __mul__(self, other: Any) -> "KElem":
        b = self._other(other)
        if b is None:
            return NotImplemented
        if self.den.is_one() and b.den.is_one():
            return KElem(self.field, self.num * b.num, self.den)
        if self.den.is_one() or b.den.is_one():
            c, f = (self, b) if self.den.is_one() else (b, self)
            if c.is_zero():
                return self.field.zero
            num, den = c.num, f.den
            g = num.gcd(den)
            if not g.is_one():
                num, den = num // g, den // g
            return KElem(self.field, num * f.num, den)
        return self.field.make(self.num * b.num, self.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "KElem":
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in K")
        inverse = self.field.const.one / self.num.leading
        return KElem(
            self.field, self.den.scale(inverse), self.num.scale(inverse)
        )

    def __truediv__(self, other: Any) -> "KElem":
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self * b.inverse()

    def __rtruediv__(self, other: Any) -> "KElem":
        return self.inverse() * other

    def __pow__(self, k: int) -> "KElem":
        if k < 0:
            return self.inverse() ** (-k)
        return KElem(self.field, self.num**k, self.den**k)

    def format(self) -> str:
        """Canonical text, e.g. ``tau^2+tau+1`` or ``(tau+1)/tau``."""
        num = self.num.format("tau")
        if self.den.is_one():
            return num
        den = self.den.format("tau")
        if not _is_atomic(num):
            num = f"({num})"
        if not _is_atomic(den):
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"KElem({self.format()})"

    def sort_key(self) -> Tuple:
        return self.field.element_key(self)


def _is_atomic(text: str) -> bool:
    return all(ch.isalnum() or ch in "^_" for ch in text)


def frobenius(x: Any, n: int, q: Optional[int] = None) -> Any:
    """
    Twist x by the n-th power of the q-Frobenius.

    :param x: Field element or element of K
    :type x: FieldElem or KElem
    :param n: Exponent, negative for roots
    :type n: int
    :param q: Order of the base field for a bare finite field element,
        defaults to the element's own field which makes the map trivial
    :type q: int or None
    :returns: x^(q^n)
    :rtype: FieldElem or KElem
    :raises NoRoot: When a negative twist has no root in K
    """
    if isinstance(x, KElem):
        return x.field.frobenius(x, n)
    desc = x.desc
    if q is None:
        return x
    e = 0
    power = 1
    while power < q:
        power *= desc.p
        e += 1
    if power != q:
        raise NotPrime(f"{q} is not a power of {desc.p}")
    return desc.frob_p(x, e * n)


def enumerate_span(
    basis: Sequence[Any],
    field: FieldDesc,
    max_enum: int = DEFAULT_MAX_ENUM,
    zero: Any = None,
) -> Iterator[Any]:
    """
    Yield every F_q-linear combination of basis.

    Combinations come in lexicographic order of the coefficient vector
    (c_1, ..., c_n) with coefficients ordered by packed value.

    :param basis: Elements of an F_q-vector space
    :type basis: Sequence
    :param field: Scalars F_q
    :type field: FieldDesc
    :param max_enum: Cap on the number of combinations
    :type max_enum: int
    :param zero: Zero of the space, needed only for an empty basis
    :type zero: Any
    :returns: iterator over the span
    :rtype: Iterator
    :raises BudgetExceeded: When q^n exceeds max_enum
    """
    n = len(basis)
    size = field.order**n
    if size > max_enum:
        raise BudgetExceeded(
            f"Span of size {field.order}^{n} exceeds the cap {max_enum}"
        )
    logger.debug(f"Enumerating {size} combinations over {field!r}")
    if n == 0:
        yield field.zero if zero is None else zero
        return
    scalars = field.elements()
    if isinstance(basis[0], FieldElem) and basis[0].desc != field:
        scalars = [basis[0].desc.coerce(c) for c in scalars]
    multiples = [[c * b for c in scalars] for b in basis]
    for choice in itertools.product(range(field.order), repeat=n):
        acc = multiples[0][choice[0]]
        for j in range(1, n):
            if choice[j]:
                acc = acc + multiples[j][choice[j]]
        yield acc
