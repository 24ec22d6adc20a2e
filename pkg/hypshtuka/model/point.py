"""Points of the projective line."""
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
from typing import Any
from typing import Tuple

from hypshtuka.poly import Poly


@dataclass(frozen=True)
class Infinity:
    """The point at infinity, t = 1/s with s = 0."""

    @property
    def degree(self) -> int:
        return 1

    def sort_key(self) -> Tuple:
        return (0,)

    def format(self) -> str:
        return "[inf]"


@dataclass(frozen=True)
class Finite:
    """
    Point t = x with x in a finite field or in K.

    :ivar x: Coordinate
    :vartype x: FieldElem or KElem
    """

    x: Any

    @property
    def degree(self) -> int:
        return 1

    def sort_key(self) -> Tuple:
        key = self.x.sort_key()
        rank = 0 if len(key) == 1 else 1
        return (1, rank, key)

    def format(self) -> str:
        return f"[{self.x.format()}]"


@dataclass(frozen=True)
class Closed:
    """
    Closed point of degree at least two given by a monic irreducible
    polynomial over the base field.

    :ivar poly: Monic irreducible polynomial in t
    :vartype poly: Poly
    """

    poly: Poly

    @property
    def degree(self) -> int:
        return self.poly.degree

    def sort_key(self) -> Tuple:
        return (2, self.poly.sort_key())

    def format(self) -> str:
        return f"[{self.poly.format('t')}]"


INFINITY = Infinity()
