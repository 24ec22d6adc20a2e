"""Exceptions raised by hypshtuka."""
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


class HypShtukaError(Exception):
    """Base class of every error raised by the library."""


class InputError(HypShtukaError, ValueError):
    """The caller supplied a value outside an operation's domain."""


class ComputationError(HypShtukaError, ArithmeticError):
    """An exact computation could not be carried out."""


class NotPrime(InputError):
    """Field characteristic is not a prime number."""


class ReducibleModulus(InputError):
    """Field modulus is not monic irreducible of the requested degree."""


class ModulusRequired(InputError):
    """No built-in modulus exists for the requested field size."""


class FieldMismatch(InputError):
    """Operands live over incompatible fields."""


class NoRoot(ComputationError):
    """Element is not a q^n-th power in the coefficient field."""


class BudgetExceeded(ComputationError):
    """Enumeration would exceed the configured cap."""


class PoleAtPoint(ComputationError):
    """Rational function has a pole where a value was requested."""


class NonzeroDegree(InputError):
    """Divisor of nonzero degree where a principal divisor is required."""


class Unfactorable(ComputationError):
    """Divisor of a function with transcendental coefficients is unknown."""


class FieldTooSmall(InputError):
    """Closed point does not split in the requested field."""


class PoleOnConductor(ComputationError):
    """Function is not regular along the conductor."""


class SupportMeetsConductor(InputError):
    """Divisor support intersects the conductor."""


class ZeroConductor(InputError):
    """Conductor must be a nonzero effective divisor."""


class ZeroAlphaBeta(InputError):
    """Principal part argument is zero."""


class WrongRegime(InputError):
    """Divisor degree does not belong to the requested regime."""


class UndefinedRegime(InputError):
    """Divisor degree lies in the gap where the ratio is undefined."""


class DegenerateFunctional(ComputationError):
    """Residue functional vanishes identically on the differential space."""


class BadDegree(InputError):
    """Shtuka divisor does not have degree -1."""


class RelationFails(InputError):
    """Shtuka relation has no witness modulo the conductor."""


class NonGenericBasepoint(InputError):
    """Basepoint does not depend on the transcendental."""


class SolveFailed(ComputationError):
    """Linear system expected to be uniquely solvable is singular."""


class NoDecomposition(InputError):
    """No E = E1 - E2 decomposition suitable for the determinant method."""


class DeterminantVanishes(ComputationError):
    """A determinant that must be nonzero vanished."""


class ParseError(InputError):
    """Text input does not follow the grammar."""
