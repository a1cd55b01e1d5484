from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import itertools
from dataclasses import dataclass, field

import numpy as np
import tqdm

from petitcode import logger

from ..algebras import PetitElement, gamma, iterated_matrix, right_matrix
from ..errors import (BudgetExceeded, EmbeddingMissing, EmptyCode, InvariantViolation, NonPrincipalIdeal,
                      NotInOuterCode, ZeroElement)
from ..exact import det_exact
from ..fields import ComplexEmbedding, FieldElement, IntegralIdeal, NumberField
from ..orders import NaturalOrder, QuotientAlgebra
from ..rings import IntegralRing
from .codes import OuterCode, hamming_distance


Matrix = List[List[Any]]


def inner_matrix(order: NaturalOrder, x: PetitElement, codeword: bool = False, form: str = "regular") -> Matrix:
    """Right multiplication matrix of an order element over ``O_K``

    ``γ(x)`` for algebras ``t^m - d``, ``M(x)`` for generalized cyclic algebras and the
    generic right regular matrix otherwise

    :param order: Natural order
    :type order: NaturalOrder
    :param x: Order element
    :type x: PetitElement
    :param codeword: Whether ``x`` is used as a codeword (must be nonzero) (default: ``False``)
    :type codeword: bool, optional
    :param form: Form of ``M(x)`` for generalized cyclic algebras (default: ``"regular"``)
    :type form: str, optional

    :raises ZeroElement: If a codeword element is zero
    """
    if codeword and x.is_zero():
        raise ZeroElement("Codeword matrices come from nonzero elements")
    algebra = order.algebra
    if order.iterated:
        return iterated_matrix(algebra, x, form)
    if algebra.is_cyclic_form():
        return gamma(algebra, x)
    return right_matrix(algebra, x)


def resolve_embedding(field: NumberField, name: Optional[str]) -> ComplexEmbedding:
    """Configured complex embedding of a field (the first one if ``name`` is empty)

    :raises EmbeddingMissing: If the field has no such embedding
    """
    if not field.embeddings:
        raise EmbeddingMissing("Field {} has no complex embedding".format(field.name), field="code.embedding")
    if not name:
        return next(iter(field.embeddings.values()))
    if name not in field.embeddings:
        raise EmbeddingMissing("Unknown embedding {!r} (available: {})".format(name, ", ".join(field.embeddings)),
                               field="code.embedding")
    return field.embeddings[name]


def _is_zero_matrix(matrix: Matrix) -> bool:
    return all(entry.is_zero() for row in matrix for entry in row)


def embedded_det(matrix: Matrix, embedding: ComplexEmbedding, ring: Optional[IntegralRing] = None,
                 tolerance: float = 1e-6) -> Tuple[FieldElement, float]:
    """Exact determinant and its squared absolute value under an embedding

    The numeric value is cross-checked against the determinant of the embedded matrix

    :raises InvariantViolation: If both values differ by more than the relative tolerance
    """
    ring = ring if ring is not None else IntegralRing(embedding.field)
    det = det_exact(matrix, ring)
    value = abs(embedding(det)) ** 2
    numeric = abs(np.linalg.det(embedding.matrix(matrix))) ** 2
    if abs(value - numeric) > tolerance * max(1.0, value):
        raise InvariantViolation("Exact determinant {} disagrees with the embedded one ({:.6g} != {:.6g})" \
            .format(det, value, numeric))
    return det, value


def min_det(matrices: Sequence[Matrix], embedding: Optional[ComplexEmbedding]) -> float:
    """Minimum of ``|det X|^2`` over the nonzero matrices

    Determinants are computed exactly in ``O_K`` and then embedded

    Example::

        >>> min_det([identity_matrix(2, O_K)], embedding)
        1.0

    :param matrices: Matrices over ``O_K``
    :type matrices: sequence of lists of lists
    :param embedding: Complex embedding of ``K``
    :type embedding: ComplexEmbedding

    :raises EmbeddingMissing: If no embedding is given
    :raises EmptyCode: If every matrix is zero

    :return: Minimum determinant (squared absolute value)
    :rtype: float
    """
    if embedding is None:
        raise EmbeddingMissing("min_det needs a complex embedding", field="code.embedding")
    ring = IntegralRing(embedding.field)
    values = [embedded_det(matrix, embedding, ring)[1] for matrix in matrices if not _is_zero_matrix(matrix)]
    if not values:
        raise EmptyCode("No nonzero matrix")
    return min(values)


def principal_generator(ideal: IntegralIdeal) -> FieldElement:
    """Generator ``α`` of a principal ideal

    :raises NonPrincipalIdeal: If more than one generator is configured
    """
    if not ideal.is_principal():
        raise NonPrincipalIdeal("The determinant bound needs a principal ideal, got {}".format(ideal),
                                field="ideal.generators")
    return ideal.generators[0]


def alpha_magnitudes(alpha: Union[FieldElement, complex, float], embeddings: Optional[Sequence[ComplexEmbedding]] = None) -> List[float]:
    """``|α|`` under every configured archimedean embedding (distinct values, ascending)

    :raises EmbeddingMissing: If ``α`` is a field element and no embedding is given
    """
    if not isinstance(alpha, FieldElement):
        return [abs(alpha)]
    if not embeddings:
        raise EmbeddingMissing("|alpha| needs a complex embedding", field="code.embedding")
    return sorted({round(abs(embedding(alpha)), 12) for embedding in embeddings})


def key_bound(min_det_inner: float,
              hamming: int,
              alpha: Union[FieldElement, complex, float],
              n: int,
              embeddings: Optional[Sequence[ComplexEmbedding]] = None) -> float:
    """Lower bound ``min|det X_i|^2 · min(d_H^2, |α|^(2n))`` for the minimum determinant of a coset code

    With several embeddings the smallest ``|α|`` is used

    Example::

        >>> key_bound(1.0, 2, 1 + 1j, 2)
        4.000000000000001

    :param min_det_inner: Minimum determinant of the inner code
    :type min_det_inner: float
    :param hamming: Hamming distance of the outer code
    :type hamming: int
    :param alpha: Generator of the ideal (field element or its absolute value)
    :param n: Size of the codeword matrices
    :type n: int
    :param embeddings: Embeddings for a field element ``α`` (default: ``None``)
    :type embeddings: list of ComplexEmbedding, optional

    :raises EmbeddingMissing: If ``α`` is a field element and no embedding is given

    :return: Lower bound
    :rtype: float
    """
    magnitude = min(alpha_magnitudes(alpha, embeddings))
    return min_det_inner * min(hamming ** 2, magnitude ** (2 * n))


@dataclass
class CosetCodeword:
    elements: Tuple[PetitElement, ...]
    matrices: List[Matrix]

    @property
    def length(self) -> int:
        return len(self.elements)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.elements)


class InnerCodebook():
    def __init__(self, order: NaturalOrder, form: str = "regular") -> None:
        """Right multiplication matrices of order elements with cached exact determinants

        :param order: Natural order
        :type order: NaturalOrder
        :param form: Form of ``M(x)`` for generalized cyclic algebras (default: ``"regular"``)
        :type form: str, optional
        """
        self.order = order
        self.form = form
        self.ring = IntegralRing(order.field)
        self._matrices = {}
        self._determinants = {}

    def __len__(self) -> int:
        return len(self._matrices)

    def matrix(self, x: PetitElement) -> Matrix:
        if x not in self._matrices:
            self._matrices[x] = inner_matrix(self.order, x, form=self.form)
        return self._matrices[x]

    def determinant(self, x: PetitElement) -> FieldElement:
        if x not in self._determinants:
            self._determinants[x] = det_exact(self.matrix(x), self.ring)
        return self._determinants[x]

    def codeword(self, elements: Sequence[PetitElement]) -> CosetCodeword:
        return CosetCodeword(tuple(elements), [self.matrix(x) for x in elements])


def project_matrix(quotient: QuotientAlgebra, matrix: Matrix) -> List[List[int]]:
    """Entries read modulo ``I·O_K``"""
    return [[quotient.quotient_ring.project(entry) for entry in row] for row in matrix]


def project_codeword(quotient: QuotientAlgebra, codeword: CosetCodeword) -> Tuple[PetitElement, ...]:
    """Outer word ``(psi(x_1), ..., psi(x_L))`` of a coset codeword"""
    return tuple(quotient.psi(x) for x in codeword.elements)


def lift_codeword(quotient: QuotientAlgebra, code: OuterCode, word: Sequence[PetitElement],
                  codebook: Optional[InnerCodebook] = None) -> CosetCodeword:
    """Canonical coset codeword over an outer codeword (least nonnegative residues in the SNF boxes)

    :raises NotInOuterCode: If the word is not a codeword
    """
    if word not in code:
        raise NotInOuterCode("The word is not in {}".format(code.name))
    codebook = codebook if codebook is not None else InnerCodebook(quotient.order)
    return codebook.codeword([quotient.lift(y) for y in word])


@dataclass
class FullDiversityReport:
    pairs: int
    linear: bool
    full_rank: bool
    smallest: List[float] = field(default_factory=list)


def full_diversity_check(order: NaturalOrder,
                         embedding: ComplexEmbedding,
                         rng: np.random.Generator,
                         samples: int = 100,
                         box: int = 2,
                         keep: int = 5) -> FullDiversityReport:
    """Check ``X(x) - X(y) = X(x - y)`` and ``det X(x - y) != 0`` on random distinct pairs

    The smallest ``|det|^2`` values seen are kept since nonassociative codes need not have
    non-vanishing determinants
    """
    codebook = InnerCodebook(order)
    ring = codebook.ring
    linear, full_rank, values = True, True, []
    pairs = 0
    while pairs < samples:
        x, y = order.random_element(rng, box), order.random_element(rng, box)
        if x == y:
            continue
        pairs += 1
        X, Y, Z = codebook.matrix(x), codebook.matrix(y), codebook.matrix(x - y)
        if any(ring.sub(a, b) != c for rx, ry, rz in zip(X, Y, Z) for a, b, c in zip(rx, ry, rz)):
            linear = False
        det = codebook.determinant(x - y)
        if det.is_zero():
            full_rank = False
        values.append(abs(embedding(det)) ** 2)
    return FullDiversityReport(pairs=pairs, linear=linear, full_rank=full_rank, smallest=sorted(values)[:keep])


def box_elements(order: NaturalOrder, support: Optional[Sequence[int]] = None, box: int = 2) -> List[PetitElement]:
    """Order elements whose integer coordinates on ``support`` lie in ``[-box, box]`` (zero elsewhere)

    The default support is the rational coordinate of every ``O_K`` coefficient
    """
    degree = order.field.degree
    size = order.rank * degree
    support = list(support) if support is not None else [k * degree for k in range(order.rank)]
    if any(k < 0 or k >= size for k in support):
        raise ValueError("Support indices must lie in [0, {})".format(size))
    elements = []
    for values in itertools.product(range(-box, box + 1), repeat=len(support)):
        coordinates = [0] * size
        for k, value in zip(support, values):
            coordinates[k] = value
        elements.append(order.from_coordinates(coordinates))
    return elements


def enumerate_coset_code(quotient: QuotientAlgebra,
                         code: OuterCode,
                         elements: Sequence[PetitElement],
                         budget: int = 1000000,
                         progress: bool = False) -> List[Tuple[PetitElement, ...]]:
    """All ``L``-tuples of the given order elements whose reduction lies in the outer code

    Systematic codes are enumerated over their information positions with the remaining
    positions drawn from the elements of matching reduction

    :raises BudgetExceeded: If the enumeration exceeds the budget
    """
    buckets: Dict[PetitElement, List[PetitElement]] = {}
    for x in elements:
        buckets.setdefault(quotient.psi(x), []).append(x)
    L = code.length
    words = []
    if code.systematic is not None:
        k = code.systematic
        required = len(elements) ** k * max(len(b) for b in buckets.values()) ** (L - k)
        if required > budget:
            raise BudgetExceeded("coset code enumeration", required, budget)
        for information in tqdm.tqdm(itertools.product(elements, repeat=k), total=len(elements) ** k,
                                     disable=not progress, desc="coset code"):
            word = code.encode([quotient.psi(x) for x in information])
            choices = [buckets.get(y, []) for y in word[k:]]
            for rest in itertools.product(*choices):
                words.append(tuple(information) + rest)
    else:
        if len(elements) ** L > budget:
            raise BudgetExceeded("coset code enumeration", len(elements) ** L, budget)
        for candidate in tqdm.tqdm(itertools.product(elements, repeat=L), total=len(elements) ** L,
                                   disable=not progress, desc="coset code"):
            if tuple(quotient.psi(x) for x in candidate) in code:
                words.append(candidate)
    return words


def sigma_determinant(matrices: Sequence[np.ndarray]) -> float:
    """``det(X_1 X_1^H + ... + X_L X_L^H)`` of the ``n x nL`` codeword ``(X_1, ..., X_L)``"""
    total = sum(X @ X.conj().T for X in matrices)
    return float(np.real(np.linalg.det(total)))


@dataclass
class BoundReport:
    codewords: int
    elements: int
    hamming: int
    inner_min_det: float
    alpha_magnitudes: List[float]
    bound: float
    enumerated_min: float
    valid: bool


def bound_check(quotient: QuotientAlgebra,
                code: OuterCode,
                embedding: ComplexEmbedding,
                support: Optional[Sequence[int]] = None,
                box: int = 2,
                budget: int = 1000000,
                threads: int = 1,
                progress: bool = False,
                tolerance: float = 1e-6) -> BoundReport:
    """Compare the determinant bound with an exhaustively enumerated coset code

    The inner minimum runs over the enumerated elements and their quotients by ``α``
    (the latter bound codewords lying entirely in ``IΛ``); the enumerated minimum is the
    smallest ``det(Σ X_i X_i^H)`` over nonzero codewords

    :raises NonPrincipalIdeal: If the ideal is not principal
    :raises BudgetExceeded: If the enumeration exceeds the budget
    :raises EmptyCode: If the enumeration has no nonzero codeword
    """
    order = quotient.order
    alpha = principal_generator(quotient.ideal)
    elements = box_elements(order, support, box)
    words = enumerate_coset_code(quotient, code, elements, budget=budget, progress=progress)
    codebook = InnerCodebook(order)

    inner = []
    for x in elements:
        if x.is_zero():
            continue
        candidates = [x]
        if quotient.in_ideal_lattice(x):
            candidates.append(order.from_field_coefficients([a / alpha for a in order.field_coefficients(x)]))
        for y in candidates:
            inner.append(abs(embedding(codebook.determinant(y))) ** 2)
    if not inner:
        raise EmptyCode("No nonzero order element in the box")

    embedded = {}
    enumerated = None
    for word in tqdm.tqdm(words, disable=not progress, desc="determinants"):
        if all(x.is_zero() for x in word):
            continue
        for x in word:
            if x not in embedded:
                embedded[x] = embedding.matrix(codebook.matrix(x))
        value = sigma_determinant([embedded[x] for x in word])
        enumerated = value if enumerated is None else min(enumerated, value)
    if enumerated is None:
        raise EmptyCode("The enumerated coset code has no nonzero codeword")

    hamming = hamming_distance(code, threads=threads, progress=progress)
    inner_min = min(inner)
    magnitudes = alpha_magnitudes(alpha, list(order.field.embeddings.values()) or [embedding])
    bound = key_bound(inner_min, hamming, alpha, order.rank, [embedding])
    valid = enumerated >= bound * (1 - tolerance)
    if not valid:
        logger.warning("Enumerated minimum {:.6g} is below the bound {:.6g}".format(enumerated, bound))
    return BoundReport(codewords=len(words), elements=len(elements), hamming=hamming, inner_min_det=inner_min,
                       alpha_magnitudes=magnitudes, bound=bound, enumerated_min=enumerated, valid=valid)
