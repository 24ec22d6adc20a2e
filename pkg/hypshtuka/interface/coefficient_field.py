"""Coefficient fields for polynomials and rational functions."""
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
from abc import ABC
from abc import abstractmethod
from typing import Any
from typing import Tuple


class CoefficientField(ABC):
    """
    Field of constants over which polynomials in t are formed.

    Implemented by finite fields F_q and by K = F_{q'}(tau). Every
    coefficient field sits over a base finite field F_q whose order q is
    the exponent used by twisting.
    """

    @property
    @abstractmethod
    def zero(self) -> Any:
        """
        Additive identity.

        :returns: zero element
        :rtype: Any
        """
        raise NotImplementedError()

    @property
    @abstractmethod
    def one(self) -> Any:
        """
        Multiplicative identity.

        :returns: unit element
        :rtype: Any
        """
        raise NotImplementedError()

    @property
    @abstractmethod
    def characteristic(self) -> int:
        """
        Characteristic p of the field.

        :returns: p
        :rtype: int
        """
        raise NotImplementedError()

    @property
    @abstractmethod
    def base(self) -> Any:
        """
        Base finite field F_q of the curve.

        :returns: base field descriptor
        :rtype: FieldDesc
        """
        raise NotImplementedError()

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """
        Convert an integer or an element of a subfield into this field.

        :param value: Integer, base field element or element of this field
        :type value: Any
        :returns: element of this field
        :rtype: Any
        """
        raise NotImplementedError()

    @abstractmethod
    def frobenius(self, x: Any, n: int) -> Any:
        """
        Return x^(q^n), q the order of the base field.

        :param x: Element of this field
        :type x: Any
        :param n: Twisting exponent, negative for q^|n|-th roots
        :type n: int
        :returns: twisted element
        :rtype: Any
        :raises NoRoot: For negative n when no root exists in the field
        """
        raise NotImplementedError()

    @abstractmethod
    def is_base_rational(self, x: Any) -> bool:
        """
        Tell whether x lies in the base field F_q.

        :param x: Element of this field
        :type x: Any
        :returns: membership
        :rtype: bool
        """
        raise NotImplementedError()

    @abstractmethod
    def format_element(self, x: Any) -> str:
        """
        Canonical text of an element.

        :param x: Element of this field
        :type x: Any
        :returns: text
        :rtype: str
        """
        raise NotImplementedError()

    @abstractmethod
    def element_key(self, x: Any) -> Tuple:
        """
        Total order key used for deterministic sorting.

        :param x: Element of this field
        :type x: Any
        :returns: sortable key
        :rtype: tuple
        """
        raise NotImplementedError()
