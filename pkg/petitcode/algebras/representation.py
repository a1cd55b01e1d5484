from typing import Any, List, Sequence, Union

import numpy as np

from ..errors import ShapeMismatch, SpecMismatch
from ..rings import CoefficientRing
from .cyclic import CyclicAlgebraRing
from .petit import PetitAlgebra, PetitElement


Matrix = List[List[Any]]


def _coefficients(algebra: PetitAlgebra, x: Union[PetitElement, Sequence[Any]]) -> Sequence[Any]:
    coefficients = x.coefficients if isinstance(x, PetitElement) else list(x)
    if len(coefficients) != algebra.m:
        raise ShapeMismatch("Expected {} coefficients, got {}".format(algebra.m, len(coefficients)))
    return coefficients


def right_matrix(algebra: PetitAlgebra, x: Union[PetitElement, Sequence[Any]]) -> Matrix:
    """Matrix of ``g -> g ∘ x`` over the coefficient ring: column ``j`` holds the coefficients of ``t^j ∘ x``

    Valid for every Petit algebra since the coefficient ring lies in the left nucleus
    """
    x = algebra.element(_coefficients(algebra, x))
    columns = [algebra.mul(algebra.t(j) if j else algebra.one(), x).coefficients for j in range(algebra.m)]
    return [[columns[j][i] for j in range(algebra.m)] for i in range(algebra.m)]


def gamma(algebra: PetitAlgebra, x: Union[PetitElement, Sequence[Any]]) -> Matrix:
    """Right multiplication matrix ``γ(x)`` of a nonassociative cyclic algebra ``f = t^m - d``

    ``coordinates(g ∘ x) = γ(x) · coordinates(g)`` with entry ``(i, j)`` equal to
    ``sigma^j(x_(i-j))`` on and below the diagonal and ``sigma^j(x_(m+i-j)) sigma^i(d)`` above it

    Example::

        >>> gamma(A, A.t())
        [[0, c], [1, 0]]

    :param algebra: Algebra of the form ``t^m - d`` over a commutative ring
    :type algebra: PetitAlgebra
    :param x: Element or its ``m`` coefficients
    :type x: PetitElement or sequence

    :raises ShapeMismatch: If ``x`` has the wrong length or the algebra is not of cyclic form over a commutative ring

    :return: ``m x m`` matrix over the coefficient ring
    :rtype: list of lists
    """
    coefficients = _coefficients(algebra, x)
    ring, m = algebra.ring, algebra.m
    if not algebra.is_cyclic_form() or not ring.is_commutative:
        raise ShapeMismatch("γ needs an algebra t^m - d over a commutative ring")
    power = algebra.skew_ring.sigma_power
    d = algebra.cyclic_parameter()
    twisted = [power(d, i) for i in range(m)]
    matrix = []
    for i in range(m):
        row = []
        for j in range(m):
            if i >= j:
                row.append(power(coefficients[i - j], j))
            else:
                row.append(ring.mul(power(coefficients[m + i - j], j), twisted[i]))
        matrix.append(row)
    return matrix


def matrix_vector(matrix: Matrix, vector: Sequence[Any], ring: CoefficientRing) -> List[Any]:
    result = []
    for row in matrix:
        value = ring.zero()
        for a, v in zip(row, vector):
            value = ring.add(value, ring.mul(a, v))
        result.append(value)
    return result


def _sigma_entries(matrix: Matrix, sigma: Any, k: int) -> Matrix:
    for _ in range(k):
        matrix = [[sigma(a) for a in row] for row in matrix]
    return matrix


def _assemble(blocks: List[List[Matrix]], n: int) -> Matrix:
    m = len(blocks)
    return [[blocks[i][j][r][s] for j in range(m) for s in range(n)] for i in range(m) for r in range(n)]


def iterated_coordinates(algebra: PetitAlgebra, x: PetitElement) -> List[Any]:
    """Coordinates of an element of ``(D, sigma, d)`` over the coefficient ring of ``D`` (``x_0`` block first)"""
    return [a for y in x.coefficients for a in y]


def iterated_matrix(algebra: PetitAlgebra, x: Union[PetitElement, Sequence[Any]], form: str = "regular") -> Matrix:
    """``(mn) x (mn)`` matrix of an element of a generalized cyclic algebra ``(D, sigma, d)``

    ``form="regular"`` is the right regular representation: block ``(i, j)`` is ``γ_D`` of the
    coefficient of ``t^i`` in ``t^j ∘ x``, so ``coordinates(g ∘ x) = M(x) · coordinates(g)``.
    ``form="scalar"`` multiplies blocks by ``d`` as a scalar: block ``(i, j)`` is
    ``sigma^j(γ_D(x_(i-j)))`` on and below the block diagonal and ``d sigma^j(γ_D(x_(m+i-j)))``
    above it; its determinant is fixed by ``sigma`` when ``d`` is.  Both forms agree when ``d``
    is fixed by ``rho`` and ``sigma``

    :param algebra: Algebra built by ``make_iterated``
    :type algebra: PetitAlgebra
    :param x: Element or its ``m`` coefficients in ``D``
    :type x: PetitElement or sequence
    :param form: ``"regular"`` or ``"scalar"`` (default: ``"regular"``)
    :type form: str, optional

    :raises SpecMismatch: If the algebra is not a generalized cyclic algebra
    :raises ShapeMismatch: If ``x`` has the wrong length
    :raises ValueError: If the form is unknown

    :return: Matrix over the coefficient ring of ``D``
    :rtype: list of lists
    """
    D = algebra.ring
    if not isinstance(D, CyclicAlgebraRing) or algebra.spec is None:
        raise SpecMismatch("{} is not a generalized cyclic algebra".format(algebra.name), field="algebra.iterated")
    coefficients = _coefficients(algebra, x)
    m, n = algebra.m, D.n
    if form == "regular":
        Y = right_matrix(algebra, coefficients)
        blocks = [[D.gamma(Y[i][j]) for j in range(m)] for i in range(m)]
    elif form == "scalar":
        base, spec = D.base, algebra.spec
        gammas = [D.gamma(y) for y in coefficients]
        blocks = []
        for i in range(m):
            row = []
            for j in range(m):
                if i >= j:
                    row.append(_sigma_entries(gammas[i - j], spec.sigma, j))
                else:
                    block = _sigma_entries(gammas[m + i - j], spec.sigma, j)
                    row.append([[base.mul(spec.d, a) for a in r] for r in block])
            blocks.append(row)
    else:
        raise ValueError("Unknown form: {}".format(form))
    return _assemble(blocks, n)


def forms_agree(algebra: PetitAlgebra, x: Union[PetitElement, Sequence[Any]]) -> bool:
    return iterated_matrix(algebra, x, "regular") == iterated_matrix(algebra, x, "scalar")


def _plain_coordinates(algebra: PetitAlgebra, x: PetitElement) -> List[Any]:
    return list(x.coefficients)


def gamma_compatibility(algebra: PetitAlgebra, rng: np.random.Generator, pairs: int = 1000) -> int:
    """Number of sampled pairs with ``coordinates(x ∘ y) = γ(y) · coordinates(x)``

    Generalized cyclic algebras use ``M(y)`` over the coefficient ring of ``D``, algebras
    ``t^m - d`` use ``γ(y)`` and the others the right regular matrix

    :param algebra: Petit algebra over a commutative ring or a generalized cyclic algebra
    :type algebra: PetitAlgebra
    :param rng: Random number generator
    :type rng: numpy.random.Generator
    :param pairs: Number of sampled pairs (default: ``1000``)
    :type pairs: int, optional

    :raises ShapeMismatch: If the coefficient ring is not commutative outside the generalized cyclic case

    :return: Number of pairs that satisfy the identity
    :rtype: int
    """
    if algebra.spec is not None:
        ring, matrix, coordinates = algebra.ring.base, iterated_matrix, iterated_coordinates
    else:
        ring = algebra.ring
        if not ring.is_commutative:
            raise ShapeMismatch("Matrices over a noncommutative coefficient ring act on the wrong side")
        matrix = gamma if algebra.is_cyclic_form() else right_matrix
        coordinates = _plain_coordinates
    passed = 0
    for _ in range(pairs):
        x, y = algebra.random_element(rng), algebra.random_element(rng)
        if coordinates(algebra, algebra.mul(x, y)) == matrix_vector(matrix(algebra, y), coordinates(algebra, x), ring):
            passed += 1
    return passed
