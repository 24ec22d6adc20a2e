"""Exact linear algebra over finite fields and over F_{q'}(tau)."""
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
from typing import Tuple

from hypshtuka import logger_factory
from hypshtuka.errors import SolveFailed
from hypshtuka.fields import KElem
from hypshtuka.fields import KField
from hypshtuka.poly import Poly

logger = logger_factory.logger_factory.get_logger(__name__)

Matrix = List[List[Any]]


def row_reduce(
    matrix: Sequence[Sequence[Any]], field: Any
) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination.

    :param matrix: Rows of field elements
    :type matrix: Sequence
    :param field: Field of the entries
    :type field: CoefficientField
    :returns: (reduced rows, pivot column of each nonzero row)
    :rtype: tuple
    """
    rows = [list(r) for r in matrix]
    zero = field.zero
    pivots: List[int] = []
    if not rows:
        return rows, pivots
    n_cols = len(rows[0])
    pivot_row = 0
    for col in range(n_cols):
        for i in range(pivot_row, len(rows)):
            if rows[i][col] != zero:
                break
        else:
            continue
        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
        inverse = field.one / rows[pivot_row][col]
        rows[pivot_row] = [x * inverse for x in rows[pivot_row]]
        for r in range(len(rows)):
            factor = rows[r][col]
            if r == pivot_row or factor == zero:
                continue
            rows[r] = [
                x - factor * y for x, y in zip(rows[r], rows[pivot_row])
            ]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence[Any]], field: Any) -> int:
    return len(row_reduce(matrix, field)[1])


def nullspace(
    matrix: Sequence[Sequence[Any]], field: Any, n_cols: int
) -> Matrix:
    """
    Basis of the solutions of matrix * x = 0.

    Each basis vector has one free variable set to one and the others to
    zero, in increasing order of the free column.

    :param matrix: Rows of field elements
    :type matrix: Sequence
    :param field: Field of the entries
    :type field: CoefficientField
    :param n_cols: Number of unknowns, needed when there are no rows
    :type n_cols: int
    :returns: basis vectors
    :rtype: list
    """
    rows, pivots = row_reduce(matrix, field)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for f in free:
        vector = [field.zero] * n_cols
        vector[f] = field.one
        for r, p in enumerate(pivots):
            vector[p] = -rows[r][f]
        basis.append(vector)
    return basis


def solve(
    matrix: Sequence[Sequence[Any]], rhs: Sequence[Any], field: Any
) -> Optional[List[Any]]:
    """
    One solution of matrix * x = rhs with free variables set to zero.

    :returns: solution, None when the system is inconsistent
    :rtype: list or None
    """
    n_cols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = row_reduce(augmented, field)
    if n_cols in pivots:
        return None
    solution = [field.zero] * n_cols
    for r, p in enumerate(pivots):
        solution[p] = rows[r][n_cols]
    return solution


def determinant(matrix: Sequence[Sequence[Any]], field: Any) -> Any:
    """Determinant by elimination over a field."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    zero = field.zero
    det = field.one
    for k in range(n):
        for i in range(k, n):
            if rows[i][k] != zero:
                break
        else:
            return zero
        if i != k:
            rows[k], rows[i] = rows[i], rows[k]
            det = -det
        pivot = rows[k][k]
        det = det * pivot
        inverse = field.one / pivot
        for r in range(k + 1, n):
            factor = rows[r][k] * inverse
            if factor == zero:
                continue
            rows[r] = [x - factor * y for x, y in zip(rows[r], rows[k])]
    return det


def bareiss_determinant(matrix: Sequence[Sequence[Any]], one: Any) -> Any:
    """
    Determinant over an integral domain with exact division.

    Entries must support ``+``, ``-``, ``*`` and ``exquo``; the
    polynomial ring F_{q'}[tau] and F_q[t] are the intended domains.

    :param matrix: Square matrix
    :type matrix: Sequence
    :param one: Unit of the domain
    :type one: Poly
    :returns: determinant
    :rtype: Poly
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return one
    sign = False
    previous = one
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = not sign
                    break
            else:
                return rows[k][k]
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                element = pivot * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = element.exquo(previous)
        previous = pivot
    det = rows[n - 1][n - 1]
    return -det if sign else det


def _clear_row(row: Sequence[KElem], K: KField) -> List[Poly]:
    common = Poly.one(K.const)
    for x in row:
        if not x.den.is_one():
            common = common * (x.den // common.gcd(x.den))
    cleared = [x.num * (common // x.den) for x in row]
    content = Poly.zero(K.const)
    for p in cleared:
        if not p.is_zero():
            content = p if content.is_zero() else content.gcd(p)
            if content.is_one():
                break
    if content.is_zero() or content.is_one():
        return cleared
    return [p // content for p in cleared]


def fraction_free_echelon(
    matrix: Sequence[Sequence[KElem]], K: KField
) -> Tuple[List[List[Poly]], List[int]]:
    """
    Row echelon form over F_{q'}[tau] after clearing denominators.

    Each row is scaled to polynomial entries with trivial content, then
    eliminated by one-step fraction-free elimination; every division by
    the previous pivot is exact.

    :param matrix: Rows of elements of K
    :type matrix: Sequence
    :param K: Coefficient field
    :type K: KField
    :returns: (echelon rows of polynomials, pivot columns)
    :rtype: tuple
    """
    rows = [_clear_row(row, K) for row in matrix]
    pivots: List[int] = []
    if not rows:
        return rows, pivots
    n_cols = len(rows[0])
    previous = Poly.one(K.const)
    pivot_row = 0
    for col in range(n_cols):
        for i in range(pivot_row, len(rows)):
            if not rows[i][col].is_zero():
                break
        else:
            continue
        rows[pivot_row], rows[i] = rows[i], rows[pivot_row]
        pivot = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            factor = rows[r][col]
            rows[r] = [
                (pivot * x - factor * y).exquo(previous)
                for x, y in zip(rows[r], rows[pivot_row])
            ]
        previous = pivot
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    logger.debug(f"Fraction-free echelon form of rank {len(pivots)}")
    return rows, pivots


def rank_over_k(matrix: Sequence[Sequence[KElem]], K: KField) -> int:
    return len(fraction_free_echelon(matrix, K)[1])


def solve_over_k(
    matrix: Sequence[Sequence[KElem]], rhs: Sequence[KElem], K: KField
) -> List[KElem]:
    """
    One solution over K of matrix * x = rhs, free variables set to zero.

    :param matrix: Coefficient rows
    :type matrix: Sequence
    :param rhs: Right hand side
    :type rhs: Sequence
    :param K: Coefficient field
    :type K: KField
    :returns: solution vector
    :rtype: list
    :raises SolveFailed: When the system is inconsistent
    """
    n_cols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [K.coerce(b)] for row, b in zip(matrix, rhs)]
    rows, pivots = fraction_free_echelon(augmented, K)
    if n_cols in pivots:
        raise SolveFailed("Linear system over K is inconsistent")
    solution = [K.zero] * n_cols
    for r in range(len(pivots) - 1, -1, -1):
        p = pivots[r]
        acc = K.make(rows[r][n_cols])
        for c in range(p + 1, n_cols):
            if not rows[r][c].is_zero() and not solution[c].is_zero():
                acc = acc - K.make(rows[r][c]) * solution[c]
        solution[p] = acc / K.make(rows[r][p])
    return solution
