from typing import Any, List, Optional, Sequence, Tuple

import itertools
from fractions import Fraction

import numpy as np

from ..errors import ShapeMismatch, ZeroInverse


IntMatrix = List[List[int]]


def identity_matrix(size: int, one: Any = 1, zero: Any = 0) -> List[List[Any]]:
    """Square identity matrix

    :param size: Number of rows and columns
    :type size: int
    :param one: Value used on the diagonal (default: ``1``)
    :param zero: Value used off the diagonal (default: ``0``)

    :return: Identity matrix as list of rows
    :rtype: list of lists
    """
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def matmul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) -> List[List[Any]]:
    """Product of two matrices with Python arithmetic (ints, Fractions, complex)"""
    if len(a) and len(a[0]) != len(b):
        raise ShapeMismatch("Cannot multiply {}x{} by {}x{}".format(len(a), len(a[0]), len(b), len(b[0]) if b else 0))
    columns = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(columns)] for row in a]


class _SmithReduction():
    def __init__(self, matrix: Sequence[Sequence[int]]) -> None:
        """Smith normal form by extended Euclidean pivoting with explicit transforms

        The reduction keeps ``left · M · right = A`` at every step so the transforms
        can be audited afterwards

        :param matrix: Integer matrix (any shape)
        :type matrix: list of lists of int
        """
        self.A = [[int(value) for value in row] for row in matrix]
        self.num_rows = len(self.A)
        self.num_columns = len(self.A[0]) if self.num_rows else 0
        self.left = identity_matrix(self.num_rows)
        self.right = identity_matrix(self.num_columns)

    def _swap_rows(self, i: int, j: int) -> None:
        self.A[i], self.A[j] = self.A[j], self.A[i]
        self.left[i], self.left[j] = self.left[j], self.left[i]

    def _swap_columns(self, i: int, j: int) -> None:
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        for row in self.right:
            row[i], row[j] = row[j], row[i]

    def _add_row(self, target: int, source: int, k: int) -> None:
        """add k times row ``source`` to row ``target``"""
        self.A[target] = [a + k * b for a, b in zip(self.A[target], self.A[source])]
        self.left[target] = [a + k * b for a, b in zip(self.left[target], self.left[source])]

    def _add_column(self, target: int, source: int, k: int) -> None:
        """add k times column ``source`` to column ``target``"""
        for row in self.A:
            row[target] += k * row[source]
        for row in self.right:
            row[target] += k * row[source]

    def _negate_row(self, i: int) -> None:
        self.A[i] = [-a for a in self.A[i]]
        self.left[i] = [-a for a in self.left[i]]

    def _pivot(self, s: int) -> Tuple[Optional[int], Optional[int]]:
        index, smallest = (None, None), None
        for i in range(s, self.num_rows):
            for j in range(s, self.num_columns):
                value = self.A[i][j]
                if value and (smallest is None or abs(value) < smallest):
                    index, smallest = (i, j), abs(value)
        return index

    def _non_divisible(self, s: int) -> Optional[int]:
        pivot = self.A[s][s]
        for i in range(s + 1, self.num_rows):
            for j in range(s + 1, self.num_columns):
                if self.A[i][j] % pivot:
                    return i
        return None

    def reduce(self) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
        s = 0
        while s < min(self.num_rows, self.num_columns):
            i, j = self._pivot(s)
            if i is None:
                break
            self._swap_rows(s, i)
            self._swap_columns(s, j)
            pivot = self.A[s][s]
            # eliminate the s-th column and row entries
            for i in range(s + 1, self.num_rows):
                if self.A[i][s]:
                    self._add_row(i, s, -(self.A[i][s] // pivot))
            for j in range(s + 1, self.num_columns):
                if self.A[s][j]:
                    self._add_column(j, s, -(self.A[s][j] // pivot))
            # remainders left behind are smaller than the pivot: pick a new pivot
            if any(self.A[i][s] for i in range(s + 1, self.num_rows)) \
                    or any(self.A[s][j] for j in range(s + 1, self.num_columns)):
                continue
            # enforce the divisibility chain
            row = self._non_divisible(s)
            if row is not None:
                self._add_row(s, row, 1)
                continue
            if self.A[s][s] < 0:
                self._negate_row(s)
            s += 1
        return self.left, self.A, self.right


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form of an integer matrix

    Example::

        >>> U, D, V = smith_normal_form([[1, -1], [1, 1]])
        >>> D
        [[1, 0], [0, 2]]

    :param matrix: Integer matrix of any shape
    :type matrix: list of lists of int

    :return: Unimodular ``U``, diagonal ``D`` with ``d_1 | d_2 | ...`` and ``d_i >= 0``,
             unimodular ``V`` such that ``U · M · V = D``
    :rtype: tuple of three integer matrices
    """
    return _SmithReduction(matrix).reduce()


def elementary_divisors(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form"""
    _, D, _ = smith_normal_form(matrix)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def rational_inverse(matrix: Sequence[Sequence[Any]]) -> List[List[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan elimination

    :raises ShapeMismatch: If the matrix is not square
    :raises ZeroInverse: If the matrix is singular

    :return: Inverse matrix with Fraction entries
    :rtype: list of lists of Fraction
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ShapeMismatch("Square matrix expected")
    work = [[Fraction(value) for value in row] + [Fraction(int(i == j)) for j in range(size)]
            for i, row in enumerate(matrix)]
    for column in range(size):
        pivot = next((r for r in range(column, size) if work[r][column] != 0), None)
        if pivot is None:
            raise ZeroInverse("Singular matrix")
        work[column], work[pivot] = work[pivot], work[column]
        scale = work[column][column]
        work[column] = [value / scale for value in work[column]]
        for r in range(size):
            if r != column and work[r][column] != 0:
                factor = work[r][column]
                work[r] = [a - factor * b for a, b in zip(work[r], work[column])]
    return [row[size:] for row in work]


def integer_inverse(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix

    :raises ValueError: If the inverse has non-integral entries
    """
    inverse = rational_inverse(matrix)
    if any(value.denominator != 1 for row in inverse for value in row):
        raise ValueError("Matrix is not unimodular")
    return [[int(value) for value in row] for row in inverse]


def solve_rational(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> List[Fraction]:
    """Solve the square system ``matrix · x = rhs`` over Q

    :raises ZeroInverse: If the matrix is singular
    """
    inverse = rational_inverse(matrix)
    return [sum((row[k] * Fraction(rhs[k]) for k in range(len(rhs))), Fraction(0)) for row in inverse]


def rank_over_q(rows: Sequence[Sequence[Any]]) -> int:
    """Rank of a rational matrix (exact)"""
    work = [[Fraction(value) for value in row] for row in rows]
    rank, columns = 0, len(work[0]) if work else 0
    for column in range(columns):
        pivot = next((r for r in range(rank, len(work)) if work[r][column] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(rank + 1, len(work)):
            if work[r][column] != 0:
                factor = work[r][column] / work[rank][column]
                work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def rref_mod_p(rows: Any, p: int, columns: Optional[int] = None) -> np.ndarray:
    """Reduced row echelon form over the prime field F_p (zero rows dropped)

    :param rows: Integer matrix (list of rows or 2-D array)
    :param p: Prime modulus
    :type p: int
    :param columns: Number of columns, needed when ``rows`` is empty (default: ``None``)
    :type columns: int, optional

    :return: Reduced rows as an ``int64`` array of shape ``(rank, columns)``
    :rtype: np.ndarray
    """
    work = np.array(rows, dtype=np.int64) % p
    if work.size == 0:
        return np.zeros((0, columns or 0), dtype=np.int64)
    rank = 0
    for column in range(work.shape[1]):
        candidates = np.nonzero(work[rank:, column])[0]
        if not len(candidates):
            continue
        pivot = rank + int(candidates[0])
        work[[rank, pivot]] = work[[pivot, rank]]
        work[rank] = (work[rank] * pow(int(work[rank, column]), p - 2, p)) % p
        factors = work[:, column].copy()
        factors[rank] = 0
        work = (work - np.outer(factors, work[rank])) % p
        rank += 1
        if rank == work.shape[0]:
            break
    return work[:rank]


def nullspace_mod_p(matrix: Any, columns: int, p: int) -> List[List[int]]:
    """Basis of the right kernel ``{x : matrix · x = 0}`` over F_p

    :param matrix: Rows of the linear map (may be empty)
    :type matrix: list of lists of int or np.ndarray
    :param columns: Dimension of the domain
    :type columns: int
    :param p: Prime modulus
    :type p: int

    :return: Kernel basis vectors in reduced form
    :rtype: list of lists of int
    """
    reduced = rref_mod_p(matrix, p, columns)
    pivots = [int(np.nonzero(row)[0][0]) for row in reduced]
    basis = []
    for j in (j for j in range(columns) if j not in pivots):
        vector = [0] * columns
        vector[j] = 1
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = int(-row[j]) % p
        basis.append(vector)
    return basis


def det_exact(matrix: Sequence[Sequence[Any]], ring: Any = None) -> Any:
    """Exact determinant over a commutative coefficient ring

    Integral domains use Bareiss fraction-free elimination (the exact division is
    delegated to ``ring.divide_exact``); other rings use cofactor expansion with
    memoized minors.  Without ``ring`` the entries are combined with Python
    arithmetic (ints or Fractions)

    Example::

        >>> det_exact([[2, 0], [0, 3]])
        6

    :param matrix: Square matrix
    :type matrix: list of lists
    :param ring: Coefficient ring exposing ``zero``, ``one``, ``add``, ``sub``, ``mul``, ``is_zero``,
                 ``is_domain`` and ``divide_exact`` (default: ``None``)

    :raises ShapeMismatch: If the matrix is not square

    :return: Determinant as a ring element
    """
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ShapeMismatch("det_exact expects a square matrix, got {} rows of lengths {}" \
            .format(size, sorted({len(row) for row in matrix})))
    arithmetic = ring if ring is not None else _PYTHON_ARITHMETIC
    if size == 0:
        return arithmetic.one()
    if arithmetic.is_domain():
        return _det_bareiss(matrix, arithmetic)
    return _det_cofactor(matrix, arithmetic)


def _det_bareiss(matrix: Sequence[Sequence[Any]], ring: Any) -> Any:
    M = [list(row) for row in matrix]
    size = len(M)
    sign = False
    previous = ring.one()
    for k in range(size - 1):
        # look for a pivot in the current column
        if ring.is_zero(M[k][k]):
            swap = next((i for i in range(k + 1, size) if not ring.is_zero(M[i][k])), None)
            if swap is None:
                return ring.zero()
            M[k], M[swap] = M[swap], M[k]
            sign = not sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                value = ring.sub(ring.mul(M[k][k], M[i][j]), ring.mul(M[i][k], M[k][j]))
                M[i][j] = ring.divide_exact(value, previous)
        previous = M[k][k]
    det = M[size - 1][size - 1]
    return ring.neg(det) if sign else det


def _det_cofactor(matrix: Sequence[Sequence[Any]], ring: Any) -> Any:
    size = len(matrix)
    cache = {}

    def minor(row: int, columns: Tuple[int, ...]) -> Any:
        if row == size:
            return ring.one()
        if columns in cache:
            return cache[columns]
        total = ring.zero()
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if ring.is_zero(entry):
                continue
            term = ring.mul(entry, minor(row + 1, columns[:position] + columns[position + 1:]))
            total = ring.sub(total, term) if position % 2 else ring.add(total, term)
        cache[columns] = total
        return total

    return minor(0, tuple(range(size)))


def det_permutation(matrix: Sequence[Sequence[Any]], ring: Any = None) -> Any:
    """Leibniz permutation expansion (reference implementation for small sizes)"""
    arithmetic = ring if ring is not None else _PYTHON_ARITHMETIC
    size = len(matrix)
    total = arithmetic.zero()
    for permutation in itertools.permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if permutation[i] > permutation[j])
        term = arithmetic.one()
        for row, column in enumerate(permutation):
            term = arithmetic.mul(term, matrix[row][column])
        total = arithmetic.sub(total, term) if inversions % 2 else arithmetic.add(total, term)
    return total


def charpoly(matrix: Sequence[Sequence[Any]], ring: Any = None) -> List[Any]:
    """Characteristic polynomial ``det(X·I - M)`` by the division-free Berkowitz algorithm

    :param matrix: Square matrix over a commutative ring
    :type matrix: list of lists
    :param ring: Coefficient ring (default: ``None`` for Python arithmetic)

    :return: Coefficients ``[c_0, c_1, ..., c_{n-1}, 1]`` (lowest degree first)
    :rtype: list
    """
    arithmetic = ring if ring is not None else _PYTHON_ARITHMETIC
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ShapeMismatch("charpoly expects a square matrix")
    vector = _berkowitz_vector([list(row) for row in matrix], arithmetic)
    return list(reversed(vector))


def _berkowitz_vector(M: List[List[Any]], ring: Any) -> List[Any]:
    size = len(M)
    if size == 0:
        return [ring.one()]
    if size == 1:
        return [ring.one(), ring.neg(M[0][0])]
    a, R = M[0][0], M[0][1:]
    C = [row[0] for row in M[1:]]
    A = [row[1:] for row in M[1:]]
    # -R · A^k · C for k = 0 .. size - 2
    diagonals = [ring.one(), ring.neg(a)]
    current = C
    for k in range(size - 1):
        value = ring.zero()
        for r, c in zip(R, current):
            value = ring.add(value, ring.mul(r, c))
        diagonals.append(ring.neg(value))
        if k < size - 2:
            current = [_dot(row, current, ring) for row in A]
    sub = _berkowitz_vector(A, ring)
    # Toeplitz (size + 1) x size matrix times the sub vector
    result = []
    for i in range(size + 1):
        value = ring.zero()
        for j in range(min(i + 1, size)):
            value = ring.add(value, ring.mul(diagonals[i - j], sub[j]))
        result.append(value)
    return result


def _dot(row: Sequence[Any], column: Sequence[Any], ring: Any) -> Any:
    value = ring.zero()
    for a, b in zip(row, column):
        value = ring.add(value, ring.mul(a, b))
    return value


class _PythonArithmetic():
    """Ring interface over Python numbers (ints and Fractions)"""
    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a: Any, b: Any) -> Any:
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        return a - b

    def neg(self, a: Any) -> Any:
        return -a

    def mul(self, a: Any, b: Any) -> Any:
        return a * b

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def is_domain(self) -> bool:
        return True

    def divide_exact(self, a: Any, b: Any) -> Any:
        if isinstance(a, int) and isinstance(b, int):
            quotient, remainder = divmod(a, b)
            if not remainder:
                return quotient
        return Fraction(a) / Fraction(b)


_PYTHON_ARITHMETIC = _PythonArithmetic()
