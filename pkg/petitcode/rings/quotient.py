from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

import math

import numpy as np

from petitcode import logger

from ..errors import BadAutomorphism, InvariantViolation, NotWellDefined, ZeroIdeal, ZeroInverse
from ..exact import integer_inverse, is_prime, smith_normal_form
from ..fields import FieldAutomorphism, FieldDerivation, FieldElement, IntegralIdeal, NumberField
from .base import CoefficientRing
from .integral import IntegralRing


class FiniteQuotientRing(CoefficientRing):
    def __init__(self, field: NumberField, ideal: IntegralIdeal, table_limit: int = 1024) -> None:
        """Finite ring O_K / I·O_K in Smith-normal-form coordinates

        Elements are the integers ``0 .. N-1``, the mixed-radix encoding of the canonical
        coordinates ``c_k in [0, d_k)`` (first coordinate fastest).  Addition and
        multiplication tables are built with numpy when ``N <= table_limit``

        :param field: Number field whose ring of integers is reduced
        :type field: NumberField
        :param ideal: Nonzero ideal (of a subring) generating ``I·O_K``
        :type ideal: IntegralIdeal
        :param table_limit: Largest cardinality with precomputed tables (default: ``1024``)
        :type table_limit: int, optional

        :raises ZeroIdeal: If the relation lattice is not of full rank
        """
        super().__init__(name="O_{}/{}".format(field.name, ideal))
        self.field = field
        self.ideal = ideal
        self.table_limit = table_limit

        n = field.degree
        _, D, V = smith_normal_form(ideal.relation_rows())
        diagonal = [D[k][k] if k < len(D) else 0 for k in range(n)]
        if any(d == 0 for d in diagonal):
            raise ZeroIdeal("I·O_K has infinite index in O_K", field="ideal")
        self.elementary_divisors = diagonal
        self._V = V
        self._V_inverse = integer_inverse(V)
        self._positions = [k for k, d in enumerate(diagonal) if d > 1]
        self.moduli = [diagonal[k] for k in self._positions]
        self.rank = len(self.moduli)

        self.weights = []
        weight = 1
        for d in self.moduli:
            self.weights.append(weight)
            weight *= d
        self._cardinality = weight
        self._moduli_array = np.array(self.moduli, dtype=np.int64)
        self._weights_array = np.array(self.weights, dtype=np.int64)

        # lifts of the canonical basis and reduced structure constants
        self._lifts = [tuple(self._V_inverse[k]) for k in self._positions]
        structure = np.zeros((self.rank, self.rank, self.rank), dtype=np.int64)
        for a in range(self.rank):
            for b in range(self.rank):
                product = field.multiply(self._lifts[a], self._lifts[b])
                structure[a, b] = self._reduce_vector(product)
        self._structure = structure
        self._one = self.project(field.one())
        self._zero = 0

        self._add_table = None
        self._mul_table = None
        self._neg_table = None
        self._inverses = None
        self._is_field = None
        if self._cardinality <= table_limit:
            self._build_tables()

    def __str__(self) -> str:
        string = super().__str__()
        string += "\n  |-- elementary divisors: {}".format(self.moduli)
        string += "\n  |-- characteristic: {}".format(self.characteristic)
        return string

    def _reduce_vector(self, x: Sequence[int]) -> List[int]:
        """Canonical coordinates of an integer coordinate vector"""
        coordinates = []
        for k, d in zip(self._positions, self.moduli):
            coordinates.append(sum(x[i] * self._V[i][k] for i in range(len(x))) % d)
        return coordinates

    def _build_tables(self) -> None:
        N, moduli, weights = self._cardinality, self._moduli_array, self._weights_array
        indices = np.arange(N, dtype=np.int64)
        C = (indices[:, None] // weights[None, :]) % moduli[None, :] if self.rank else np.zeros((N, 0), dtype=np.int64)
        self._neg_table = (((-C) % moduli) @ weights).tolist() if self.rank else [0]
        add, mul = [], []
        for x in range(N):
            add.append((((C[x] + C) % moduli) @ weights).tolist() if self.rank else [0])
            partial = np.einsum('i,ijk->jk', C[x], self._structure)
            mul.append((((C @ partial) % moduli) @ weights).tolist() if self.rank else [0])
        self._add_table, self._mul_table = add, mul

    # encoding

    def coordinates(self, a: int) -> Tuple[int, ...]:
        return tuple((a // w) % d for w, d in zip(self.weights, self.moduli))

    def from_coordinates(self, coordinates: Sequence[int]) -> int:
        return sum((int(c) % d) * w for c, d, w in zip(coordinates, self.moduli, self.weights))

    def project(self, x: Union[FieldElement, Sequence[int]]) -> int:
        """Reduction map O_K -> O_K / I·O_K

        :raises ValueError: If ``x`` is not integral
        """
        coordinates = x.coordinates if isinstance(x, FieldElement) else tuple(x)
        if any(not isinstance(c, int) for c in coordinates):
            raise ValueError("Cannot reduce a non-integral element {}".format(x))
        return self.from_coordinates(self._reduce_vector(coordinates))

    def lift(self, a: int) -> FieldElement:
        """Canonical lift: least nonnegative residues in the Smith-normal-form boxes"""
        result = [0] * self.field.degree
        for c, row in zip(self.coordinates(a), self._lifts):
            if c:
                for i, value in enumerate(row):
                    result[i] += c * value
        return FieldElement(self.field, result)

    # arithmetic

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return self._one

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        return self.from_coordinates([x + y for x, y in zip(self.coordinates(a), self.coordinates(b))])

    def neg(self, a: int) -> int:
        if self._neg_table is not None:
            return self._neg_table[a]
        return self.from_coordinates([-x for x in self.coordinates(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        x, y = np.array(self.coordinates(a), dtype=np.int64), np.array(self.coordinates(b), dtype=np.int64)
        product = np.einsum('i,j,ijk->k', x, y, self._structure) % self._moduli_array
        return int(product @ self._weights_array)

    def is_zero(self, a: int) -> bool:
        return a == 0

    def scale(self, n: int, a: int) -> int:
        return self.from_coordinates([n * x for x in self.coordinates(a)])

    def invert(self, a: int) -> int:
        inverse = self._inverse_map().get(a)
        if inverse is None:
            raise ZeroInverse("{} is not a unit of {}".format(self.render(a), self.name))
        return inverse

    def _inverse_map(self) -> dict:
        if self._inverses is None:
            inverses = {}
            one = self._one
            for a in range(self._cardinality):
                if a in inverses:
                    continue
                for b in range(self._cardinality):
                    if self.mul(a, b) == one:
                        inverses[a], inverses[b] = b, a
                        break
            self._inverses = inverses
        return self._inverses

    # structure

    @property
    def is_finite(self) -> bool:
        return True

    def cardinality(self) -> int:
        return self._cardinality

    @property
    def characteristic(self) -> int:
        order = 1
        for c, d in zip(self.coordinates(self._one), self.moduli):
            additive_order = d // math.gcd(c, d)
            order = order * additive_order // math.gcd(order, additive_order)
        return order

    def is_field(self) -> bool:
        if self._is_field is None:
            self._is_field = self._cardinality > 1 and len(self._inverse_map()) == self._cardinality - 1
        return self._is_field

    def is_domain(self) -> bool:
        return self.is_field()

    def elements(self) -> Iterator[int]:
        return iter(range(self._cardinality))

    def index(self, a: int) -> int:
        return a

    def element(self, index: int) -> int:
        return index

    def additive_generators(self) -> List[int]:
        return [self.from_coordinates([int(j == k) for j in range(self.rank)]) for k in range(self.rank)]

    def prime_coordinates(self) -> Optional[Tuple[int, int]]:
        if self.rank and len(set(self.moduli)) == 1 and is_prime(self.moduli[0]):
            return self.moduli[0], self.rank
        return None

    def render(self, a: int) -> str:
        return "[{}]".format(",".join(str(c) for c in self.coordinates(a)))


def build_quotient(ring: Union[IntegralRing, NumberField], ideal: IntegralIdeal, exponent: int = 1,
                   table_limit: int = 1024) -> FiniteQuotientRing:
    """Construct O_K / I^s O_K

    Example::

        >>> from petitcode.fields import load_field, IntegralIdeal
        >>> K = load_field("gaussian")
        >>> Q = build_quotient(K, IntegralIdeal(K.subfield("K"), [K.element([1, 1])]))
        >>> Q.cardinality()
        2

    :param ring: Ring of integers (or its field)
    :type ring: IntegralRing or NumberField
    :param ideal: Nonzero ideal
    :type ideal: IntegralIdeal
    :param exponent: Power ``s`` of the ideal (default: ``1``)
    :type exponent: int, optional
    :param table_limit: Largest cardinality with precomputed tables (default: ``1024``)
    :type table_limit: int, optional

    :raises ZeroIdeal: If the ideal is zero

    :return: Finite quotient ring
    :rtype: FiniteQuotientRing
    """
    field = ring.field if isinstance(ring, IntegralRing) else ring
    if ideal.field is not field:
        raise ValueError("Ideal belongs to another field")
    if exponent > 1:
        ideal = ideal.power(exponent)
    quotient = FiniteQuotientRing(field, ideal, table_limit=table_limit)
    logger.info("Quotient {}: {} elements, elementary divisors {}".format(quotient.name, quotient.cardinality(),
                                                                          quotient.moduli))
    return quotient


class InducedMap():
    def __init__(self,
                 quotient: CoefficientRing,
                 columns: Sequence[Sequence[int]],
                 kind: str = "automorphism",
                 name: str = "",
                 source: Any = None) -> None:
        """Additive map on a finite quotient ring given by the images of the canonical basis

        :param quotient: Quotient ring (source and target)
        :type quotient: FiniteQuotientRing
        :param columns: ``columns[k]`` = canonical coordinates of the image of ``e_k``
        :type columns: list of coordinate lists
        :param kind: ``"automorphism"`` or ``"derivation"`` (default: ``"automorphism"``)
        :type kind: str, optional
        :param name: Name used in reports (default: ``""``)
        :type name: str, optional
        :param source: Map on O_K the induced map comes from (default: ``None``)
        """
        self.quotient = quotient
        self.columns = [tuple(int(c) for c in column) for column in columns]
        self.kind = kind
        self.name = name
        self.source = source
        self._images = None
        if quotient.cardinality() <= quotient.table_limit:
            self._images = [self._apply(a) for a in range(quotient.cardinality())]

    def __repr__(self) -> str:
        return "InducedMap({}, kind={})".format(self.name, self.kind)

    def _apply(self, a: int) -> int:
        result = [0] * self.quotient.rank
        for c, column in zip(self.quotient.coordinates(a), self.columns):
            if c:
                for k, value in enumerate(column):
                    result[k] += c * value
        return self.quotient.from_coordinates(result)

    def __call__(self, a: int) -> int:
        if self._images is not None:
            return self._images[a]
        return self._apply(a)

    def compose(self, other: "InducedMap") -> "InducedMap":
        """``self ∘ other``"""
        columns = [self.quotient.coordinates(self(self.quotient.from_coordinates(column))) for column in other.columns]
        return InducedMap(self.quotient, columns, self.kind, "{}*{}".format(self.name, other.name))

    def power(self, k: int) -> "InducedMap":
        rank = self.quotient.rank
        result = InducedMap(self.quotient, [[int(i == j) for i in range(rank)] for j in range(rank)], self.kind, "id")
        for _ in range(k):
            result = self.compose(result)
        result.name = "{}^{}".format(self.name, k)
        return result

    def is_identity(self) -> bool:
        return all(self(a) == a for a in self.quotient.additive_generators())

    def order(self, limit: int = 64) -> Optional[int]:
        current = self
        for k in range(1, limit + 1):
            if current.is_identity():
                return k
            current = self.compose(current)
        return None


def induce_map(phi: Union[FieldAutomorphism, FieldDerivation],
               quotient: FiniteQuotientRing,
               sigma_bar: Optional[InducedMap] = None) -> InducedMap:
    """Induce an automorphism or sigma-derivation of O_K on O_K / I·O_K

    :param phi: Automorphism or sigma-derivation of the field
    :type phi: FieldAutomorphism or FieldDerivation
    :param quotient: Quotient ring
    :type quotient: FiniteQuotientRing
    :param sigma_bar: Induced automorphism for checking the derivation law (default: ``None``)
    :type sigma_bar: InducedMap, optional

    :raises NotWellDefined: If ``phi`` does not map the relation lattice into itself (witness: lattice vector)
    :raises BadAutomorphism: If the induced map violates its law on a basis pair

    :return: Induced map in canonical coordinates
    :rtype: InducedMap
    """
    field = quotient.field
    for j, b in enumerate(field.basis()):
        if not phi(b).is_integral():
            raise NotWellDefined("{} does not preserve O_K".format(phi.name), field=phi.name, witness=b.coordinates)
    for row in quotient.ideal.relation_rows():
        if quotient.project(phi(FieldElement(field, row))):
            raise NotWellDefined("{} does not stabilize I·O_K".format(phi.name), field=phi.name, witness=tuple(row))

    columns = [quotient.coordinates(quotient.project(phi(quotient.lift(e)))) for e in quotient.additive_generators()]
    induced = InducedMap(quotient, columns, kind=phi.kind, name=phi.name + "_bar", source=phi)

    generators = quotient.additive_generators()
    if phi.kind == "automorphism":
        for a in generators:
            for b in generators:
                if induced(quotient.mul(a, b)) != quotient.mul(induced(a), induced(b)):
                    raise BadAutomorphism("{} is not multiplicative".format(induced.name), witness=(a, b))
        if induced(quotient.one()) != quotient.one():
            raise BadAutomorphism("{} does not fix 1".format(induced.name))
        if quotient.cardinality() <= quotient.table_limit \
                and len(set(induced(a) for a in quotient.elements())) != quotient.cardinality():
            raise BadAutomorphism("{} is not injective".format(induced.name))
    elif sigma_bar is not None:
        if induced(quotient.one()):
            raise BadAutomorphism("{}(1) != 0".format(induced.name))
        for a in generators:
            for b in generators:
                expected = quotient.add(quotient.mul(sigma_bar(a), induced(b)), quotient.mul(induced(a), b))
                if induced(quotient.mul(a, b)) != expected:
                    raise BadAutomorphism("{} violates the derivation law".format(induced.name), witness=(a, b))

    # compatibility with the projection on the integral basis
    for b in field.basis():
        if quotient.project(phi(b)) != induced(quotient.project(b)):
            raise InvariantViolation("{} does not commute with the projection".format(induced.name), witness=b.coordinates)
    return induced
