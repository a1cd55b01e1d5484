from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import itertools
from fractions import Fraction

import numpy as np

from ..errors import AxiomViolation, BadAutomorphism, ZeroIdeal, ZeroInverse
from ..exact import charpoly, elementary_divisors, rank_over_q, solve_rational


Number = Union[int, Fraction]


def _normalize(value: Any) -> Number:
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    return Fraction(value)


class NumberField():
    def __init__(self,
                 name: str,
                 labels: Sequence[str],
                 table: Sequence[Sequence[Sequence[Number]]],
                 generators: Optional[Dict[str, int]] = None) -> None:
        """Number field given by an integral basis and integer structure constants

        The basis spans the ring of integers; ``b_0`` must be ``1``.  Automorphisms,
        derivations, subfields and complex embeddings are registered by the loader

        :param name: Field name
        :type name: str
        :param labels: Basis labels (the first one is the unit)
        :type labels: list of str
        :param table: Structure constants ``table[i][j]`` = coordinates of ``b_i * b_j``
        :type table: list of lists of coordinate lists
        :param generators: Generator name to basis index (default: ``None``)
        :type generators: dict, optional
        """
        self.name = name
        self.labels = list(labels)
        self.degree = len(labels)
        self.generators = dict(generators or {})

        self.table = [[tuple(_normalize(c) for c in table[i][j]) for j in range(self.degree)]
                      for i in range(self.degree)]
        # sparse structure constants: table[i][j] -> [(k, c), ...]
        self._sparse = [[[(k, c) for k, c in enumerate(self.table[i][j]) if c] for j in range(self.degree)]
                        for i in range(self.degree)]

        self.automorphisms = {}
        self.derivations = {}
        self.subfields = {}
        self.embeddings = {}

    def __str__(self) -> str:
        string = "Number field {} of degree {}".format(self.name, self.degree)
        string += "\n  |-- basis: {}".format(", ".join(self.labels))
        for name, automorphism in self.automorphisms.items():
            string += "\n  |-- automorphism {} (order {}, fixes {})".format(name, automorphism.order,
                                                                          automorphism.fixes.name if automorphism.fixes else "-")
        for name in self.subfields:
            string += "\n  |-- subfield {}".format(name)
        return string

    def element(self, coordinates: Sequence[Any]) -> "FieldElement":
        return FieldElement(self, coordinates)

    def zero(self) -> "FieldElement":
        return FieldElement(self, [0] * self.degree)

    def one(self) -> "FieldElement":
        return self.basis_element(0)

    def from_int(self, value: Number) -> "FieldElement":
        return FieldElement(self, [value] + [0] * (self.degree - 1))

    def basis_element(self, index: int) -> "FieldElement":
        return FieldElement(self, [int(k == index) for k in range(self.degree)])

    def basis(self) -> List["FieldElement"]:
        return [self.basis_element(k) for k in range(self.degree)]

    def generator(self, name: str) -> "FieldElement":
        return self.basis_element(self.generators[name])

    def multiply(self, x: Sequence[Number], y: Sequence[Number]) -> Tuple[Number, ...]:
        """Coordinates of the product of two coordinate vectors"""
        result = [0] * self.degree
        for i, a in enumerate(x):
            if not a:
                continue
            row = self._sparse[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    result[k] += ab * c
        return tuple(_normalize(value) for value in result)

    def multiplication_matrix(self, x: "FieldElement") -> List[List[Number]]:
        """Matrix of ``y -> x * y`` (column ``j`` holds the coordinates of ``x * b_j``)"""
        columns = [self.multiply(x.coordinates, self.basis_element(j).coordinates) for j in range(self.degree)]
        return [[columns[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def subfield(self, name: str) -> "Subfield":
        return self.subfields[name]

    def automorphism(self, name: str) -> "FieldAutomorphism":
        return self.automorphisms[name]

    def verify_axioms(self) -> None:
        """Check unit, commutativity and associativity on basis triples

        :raises AxiomViolation: With the offending basis triple (or pair) as witness
        """
        n = self.degree
        if any(not isinstance(c, int) for row in self.table for entry in row for c in entry):
            raise AxiomViolation("Structure constants must be integers")
        for j in range(n):
            b_j = tuple(int(k == j) for k in range(n))
            if self.table[0][j] != b_j or self.table[j][0] != b_j:
                raise AxiomViolation("b_0 = {} is not a unit".format(self.labels[0]), witness=(0, j))
        for i in range(n):
            for j in range(i + 1, n):
                if self.table[i][j] != self.table[j][i]:
                    raise AxiomViolation("b_{} * b_{} != b_{} * b_{}".format(i, j, j, i), witness=(i, j))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self.multiply(self.table[i][j], self._unit_vector(k))
                    right = self.multiply(self._unit_vector(i), self.table[j][k])
                    if left != right:
                        raise AxiomViolation("(b_{0} b_{1}) b_{2} != b_{0} (b_{1} b_{2})".format(i, j, k), witness=(i, j, k))

    def verify_domain(self, attempts: int = 8) -> None:
        """Check that the structure constants describe a field and not a product of fields

        A commutative algebra with a primitive element ``x`` is ``Q[X] / (χ_x)``, so it is a
        field exactly when the characteristic polynomial ``χ_x`` has no monic integer factor.
        Candidate factors are built from the complex roots of ``χ_x`` and confirmed by exact
        division

        :param attempts: Number of candidate primitive elements (default: ``8``)
        :type attempts: int, optional

        :raises AxiomViolation: With the zero divisors ``h(x)``, ``q(x)`` as witness
        """
        n = self.degree
        if n == 1:
            return
        indices = sorted(self.generators.values()) or list(range(1, n))
        for attempt in range(attempts):
            x = self.zero()
            for position, index in enumerate(indices):
                x = x + self.basis_element(index) * (attempt + position + 1)
            chi = [int(c) for c in charpoly(self.multiplication_matrix(x))]
            roots = np.roots(list(reversed(chi)))
            if min(abs(a - b) for a, b in itertools.combinations(roots, 2)) < 1e-6:
                continue
            for size in range(1, n // 2 + 1):
                for subset in itertools.combinations(range(n), size):
                    candidate = np.poly(roots[list(subset)])
                    rounded = np.round(candidate.real)
                    if np.max(np.abs(candidate - rounded)) > 1e-6 * max(1.0, float(np.max(np.abs(rounded)))):
                        continue
                    h = [int(c) for c in reversed(rounded)]
                    q, r = _divmod_monic(chi, h)
                    if not any(r):
                        zero_divisors = (str(_evaluate(x, h)), str(_evaluate(x, q)))
                        raise AxiomViolation("{} is not a field: ({}) * ({}) = 0".format(self.name, *zero_divisors),
                                             field="generators", witness=zero_divisors)
            return
        raise AxiomViolation("No primitive element found in {} attempts".format(attempts), field="generators")

    def _unit_vector(self, index: int) -> Tuple[int, ...]:
        return tuple(int(k == index) for k in range(self.degree))


def _divmod_monic(f: Sequence[int], g: Sequence[int]) -> Tuple[List[int], List[int]]:
    """Quotient and remainder of integer polynomials (lowest degree first) by a monic ``g``"""
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = f[k + len(g) - 1]
        q[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    return q, f[:len(g) - 1]


def _evaluate(x: "FieldElement", polynomial: Sequence[int]) -> "FieldElement":
    value = x.field.zero()
    for c in reversed(polynomial):
        value = value * x + c
    return value


class FieldElement():
    __slots__ = ("field", "coordinates")

    def __init__(self, field: NumberField, coordinates: Sequence[Any]) -> None:
        """Exact element of a number field as rational coordinates over the integral basis

        :param field: Owning field
        :type field: NumberField
        :param coordinates: Coordinates (ints, Fractions or strings such as ``"1/2"``)
        :type coordinates: sequence
        """
        if len(coordinates) != field.degree:
            raise ValueError("Expected {} coordinates, got {}".format(field.degree, len(coordinates)))
        self.field = field
        self.coordinates = tuple(_normalize(Fraction(c) if isinstance(c, str) else c) for c in coordinates)

    def _coerce(self, other: Any) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("Elements of different fields ({} and {})".format(self.field.name, other.field.name))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a + b for a, b in zip(self.coordinates, other.coordinates)])

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, [-a for a in self.coordinates])

    def __sub__(self, other: Any) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a - b for a, b in zip(self.coordinates, other.coordinates)])

    def __rsub__(self, other: Any) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other: Any) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [a * other for a in self.coordinates])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, self.field.multiply(self.coordinates, other.coordinates))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroInverse("Division by zero")
            return FieldElement(self.field, [Fraction(a) / other for a in self.coordinates])
        return self * element_inverse(other)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return element_inverse(self) ** (-exponent)
        result, base = self.field.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coordinates == other.coordinates
        if isinstance(other, (int, Fraction)):
            return self.coordinates == self.field.from_int(other).coordinates
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coordinates)

    def __bool__(self) -> bool:
        return any(self.coordinates)

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coordinates)

    def integer_coordinates(self) -> Tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("{} is not integral".format(self))
        return self.coordinates

    def inverse(self) -> "FieldElement":
        return element_inverse(self)

    def __repr__(self) -> str:
        return "FieldElement({}, {})".format(self.field.name, list(self.coordinates))

    def __str__(self) -> str:
        terms = []
        for label, c in zip(self.field.labels, self.coordinates):
            if not c:
                continue
            if label == "1":
                terms.append(str(c))
            elif c == 1:
                terms.append(label)
            elif c == -1:
                terms.append("-" + label)
            else:
                terms.append("{}*{}".format(c, label))
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def element_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """Product of two field elements through the structure constants"""
    return x * y


def element_inverse(x: FieldElement) -> FieldElement:
    """Inverse of a nonzero field element

    Solves ``M_x · y = e_0`` where ``M_x`` is the multiplication-by-x matrix

    :raises ZeroInverse: If ``x`` is zero
    """
    if x.is_zero():
        raise ZeroInverse("Zero has no inverse in {}".format(x.field.name))
    unit = [int(k == 0) for k in range(x.field.degree)]
    return FieldElement(x.field, solve_rational(x.field.multiplication_matrix(x), unit))


class Subfield():
    def __init__(self, field: NumberField, name: str, indices: Sequence[int]) -> None:
        """Subfield spanned by a subset of the integral basis

        The spanned basis vectors form an integral basis of the subfield's ring of integers

        :param field: Ambient field
        :type field: NumberField
        :param name: Subfield name
        :type name: str
        :param indices: Basis indices spanning the subfield (must include 0)
        :type indices: list of int
        """
        self.field = field
        self.name = name
        self.indices = tuple(sorted(indices))
        if 0 not in self.indices:
            raise AxiomViolation("Subfield {} must contain 1".format(name), witness=self.indices)

    @property
    def degree(self) -> int:
        return len(self.indices)

    def __repr__(self) -> str:
        return "Subfield({}, {})".format(self.name, list(self.indices))

    def basis(self) -> List[FieldElement]:
        return [self.field.basis_element(k) for k in self.indices]

    def contains(self, x: FieldElement) -> bool:
        return all(not c for k, c in enumerate(x.coordinates) if k not in self.indices)

    def element(self, coordinates: Sequence[Number]) -> FieldElement:
        """Element from coordinates over the subfield basis"""
        values = [0] * self.field.degree
        for k, c in zip(self.indices, coordinates):
            values[k] = c
        return FieldElement(self.field, values)

    def restrict(self, x: FieldElement) -> Tuple[Number, ...]:
        """Coordinates of ``x`` over the subfield basis"""
        return tuple(x.coordinates[k] for k in self.indices)

    def verify_closure(self) -> None:
        """:raises AxiomViolation: If the span is not closed under multiplication"""
        basis = self.basis()
        for i, a in enumerate(basis):
            for j, b in enumerate(basis[i:], start=i):
                if not self.contains(a * b):
                    raise AxiomViolation("Subfield {} is not closed under multiplication".format(self.name),
                                         witness=(self.indices[i], self.indices[j]))


class FieldAutomorphism():
    kind = "automorphism"

    def __init__(self,
                 field: NumberField,
                 name: str,
                 images: Sequence[Sequence[Number]],
                 order: Optional[int] = None,
                 fixes: Optional[Subfield] = None) -> None:
        """Automorphism given by the images of the integral basis

        :param field: Field
        :type field: NumberField
        :param name: Name (e.g. ``"sigma"``)
        :type name: str
        :param images: ``images[j]`` = coordinates of the image of ``b_j``
        :type images: list of coordinate lists
        :param order: Declared order (default: ``None``)
        :type order: int, optional
        :param fixes: Declared fixed subfield (default: ``None``)
        :type fixes: Subfield, optional
        """
        self.field = field
        self.name = name
        self.images = [tuple(_normalize(c) for c in image) for image in images]
        self.order = order
        self.fixes = fixes

    def __repr__(self) -> str:
        return "FieldAutomorphism({}, order={})".format(self.name, self.order)

    def __call__(self, x: FieldElement) -> FieldElement:
        result = [0] * self.field.degree
        for j, c in enumerate(x.coordinates):
            if c:
                for k, value in enumerate(self.images[j]):
                    if value:
                        result[k] += c * value
        return FieldElement(self.field, result)

    def compose(self, other: "FieldAutomorphism") -> "FieldAutomorphism":
        """``self ∘ other``"""
        images = [self(FieldElement(self.field, image)).coordinates for image in other.images]
        return FieldAutomorphism(self.field, "{}*{}".format(self.name, other.name), images)

    def power(self, k: int) -> "FieldAutomorphism":
        result = FieldAutomorphism(self.field, "id", [self.field.basis_element(j).coordinates for j in range(self.field.degree)])
        for _ in range(k % self.order if self.order else k):
            result = self.compose(result)
        result.name = "{}^{}".format(self.name, k)
        result.order = None
        return result

    def is_identity(self) -> bool:
        return all(image == self.field.basis_element(j).coordinates for j, image in enumerate(self.images))

    def validate(self) -> None:
        """Check multiplicativity on basis pairs, bijectivity, the declared order and fixed subfield

        :raises BadAutomorphism: With a witness basis pair (or index)
        """
        basis = self.field.basis()
        if self(self.field.one()) != self.field.one():
            raise BadAutomorphism("{} does not fix 1".format(self.name), witness=(0, 0))
        for i in range(self.field.degree):
            for j in range(i, self.field.degree):
                if self(basis[i] * basis[j]) != self(basis[i]) * self(basis[j]):
                    raise BadAutomorphism("{} is not multiplicative".format(self.name), witness=(i, j))
        if rank_over_q(self.images) != self.field.degree:
            raise BadAutomorphism("{} is not bijective".format(self.name))
        if self.order is not None:
            current = self
            for k in range(1, self.order):
                if current.is_identity():
                    raise BadAutomorphism("{} has order {} < declared {}".format(self.name, k, self.order), witness=k)
                current = self.compose(current)
            if not current.is_identity():
                raise BadAutomorphism("{} does not have the declared order {}".format(self.name, self.order),
                                      witness=self.order)
        if self.fixes is not None:
            for k in self.fixes.indices:
                if self(basis[k]) != basis[k]:
                    raise BadAutomorphism("{} does not fix {}".format(self.name, self.fixes.name), witness=(k, k))


class FieldDerivation():
    kind = "derivation"

    def __init__(self, field: NumberField, name: str, sigma: FieldAutomorphism, images: Sequence[Sequence[Number]]) -> None:
        """Left sigma-derivation given by the images of the integral basis

        Satisfies ``delta(ab) = sigma(a) delta(b) + delta(a) b``
        """
        self.field = field
        self.name = name
        self.sigma = sigma
        self.images = [tuple(_normalize(c) for c in image) for image in images]

    @classmethod
    def inner(cls, name: str, sigma: FieldAutomorphism, b: FieldElement) -> "FieldDerivation":
        """Inner sigma-derivation ``a -> b (sigma(a) - a)``"""
        images = [(b * (sigma(a) - a)).coordinates for a in sigma.field.basis()]
        return cls(sigma.field, name, sigma, images)

    def __repr__(self) -> str:
        return "FieldDerivation({}, sigma={})".format(self.name, self.sigma.name)

    def __call__(self, x: FieldElement) -> FieldElement:
        result = [0] * self.field.degree
        for j, c in enumerate(x.coordinates):
            if c:
                for k, value in enumerate(self.images[j]):
                    if value:
                        result[k] += c * value
        return FieldElement(self.field, result)

    def is_zero(self) -> bool:
        return not any(c for image in self.images for c in image)

    def validate(self) -> None:
        """:raises BadAutomorphism: If the sigma-derivation law fails on a basis pair"""
        basis = self.field.basis()
        if not self(self.field.one()).is_zero():
            raise BadAutomorphism("{}(1) != 0".format(self.name), witness=(0, 0))
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                if self(a * b) != self.sigma(a) * self(b) + self(a) * b:
                    raise BadAutomorphism("{} violates the {}-derivation law".format(self.name, self.sigma.name),
                                          witness=(i, j))


class ComplexEmbedding():
    def __init__(self, field: NumberField, name: str, images: Sequence[complex]) -> None:
        """Floating point embedding into the complex numbers given by the images of the basis"""
        self.field = field
        self.name = name
        self.images = np.array(images, dtype=np.complex128)

    def __repr__(self) -> str:
        return "ComplexEmbedding({})".format(self.name)

    def __call__(self, x: FieldElement) -> complex:
        return complex(np.dot(np.array([float(c) for c in x.coordinates]), self.images))

    def matrix(self, entries: Sequence[Sequence[FieldElement]]) -> np.ndarray:
        return np.array([[self(entry) for entry in row] for row in entries], dtype=np.complex128)

    def validate(self, tolerance: float = 1e-9) -> None:
        """Check the embedding against the structure constants

        :raises AxiomViolation: If ``e(b_i) e(b_j)`` differs from the embedded product
        """
        for i in range(self.field.degree):
            for j in range(self.field.degree):
                expected = complex(np.dot(np.array(self.field.table[i][j], dtype=np.float64), self.images))
                value = self.images[i] * self.images[j]
                if abs(value - expected) > tolerance * max(1.0, abs(expected)):
                    raise AxiomViolation("Embedding {} is not multiplicative (residual {:.3e})" \
                        .format(self.name, abs(value - expected)), witness=(i, j))


class IntegralIdeal():
    def __init__(self,
                 subring: Subfield,
                 generators: Sequence[FieldElement],
                 factorization: Optional[Sequence[Tuple["IntegralIdeal", int]]] = None) -> None:
        """Ideal of the ring of integers of a configured subfield

        :param subring: Subfield whose ring of integers owns the ideal
        :type subring: Subfield
        :param generators: Integral generators lying in the subfield
        :type generators: list of FieldElement
        :param factorization: Optional prime factorization as ``(prime, exponent)`` pairs
        :type factorization: list of tuples, optional

        :raises ZeroIdeal: If every generator is zero
        :raises ValueError: If a generator is not integral or not in the subring
        """
        generators = [g for g in generators if not g.is_zero()]
        if not generators:
            raise ZeroIdeal("The ideal is zero")
        for g in generators:
            if not g.is_integral():
                raise ValueError("Ideal generator {} is not integral".format(g))
            if not subring.contains(g):
                raise ValueError("Ideal generator {} is not in {}".format(g, subring.name))
        self.subring = subring
        self.field = subring.field
        self.generators = list(generators)
        self.factorization = list(factorization) if factorization else None

    def __repr__(self) -> str:
        return "IntegralIdeal({}, <{}>)".format(self.subring.name, ", ".join(str(g) for g in self.generators))

    def __str__(self) -> str:
        return "<{}>".format(", ".join(str(g) for g in self.generators))

    def is_principal(self) -> bool:
        """Whether a single generator is configured (multi-generator input is experimental)"""
        return len(self.generators) == 1

    def relation_rows(self) -> List[List[int]]:
        """Integer rows spanning the lattice ``I·O_K`` (coordinates of ``g · b_i``)"""
        basis = self.field.basis()
        return [list((g * b).coordinates) for g in self.generators for b in basis]

    def subring_rows(self) -> List[List[int]]:
        """Integer rows spanning ``I`` inside the subring, in subring coordinates"""
        return [list(self.subring.restrict(g * b)) for g in self.generators for b in self.subring.basis()]

    def norm(self) -> int:
        """Cardinality of ``O_K / I·O_K``"""
        divisors = elementary_divisors(self.relation_rows())
        if len(divisors) < self.field.degree:
            raise ZeroIdeal("Relation lattice is not of full rank")
        result = 1
        for d in divisors:
            result *= d
        return result

    def contains(self, x: FieldElement) -> bool:
        """Membership in ``I·O_K`` by comparing elementary divisors of the augmented lattice"""
        if not x.is_integral():
            return False
        rows = self.relation_rows()
        return elementary_divisors(rows) == elementary_divisors(rows + [list(x.coordinates)])

    def contains_in_subring(self, z: FieldElement) -> bool:
        """Membership in ``I`` itself (as an ideal of the subring)"""
        if not z.is_integral() or not self.subring.contains(z):
            return False
        rows = self.subring_rows()
        return elementary_divisors(rows) == elementary_divisors(rows + [list(self.subring.restrict(z))])

    def product(self, other: "IntegralIdeal") -> "IntegralIdeal":
        if other.subring is not self.subring:
            raise ValueError("Ideals of different subrings")
        return IntegralIdeal(self.subring, [a * b for a in self.generators for b in other.generators])

    def power(self, exponent: int) -> "IntegralIdeal":
        if exponent < 1:
            raise ValueError("Exponent must be positive")
        result = self
        for _ in range(exponent - 1):
            result = result.product(self)
        return result


def is_fixed_by(x: FieldElement, sigma: FieldAutomorphism) -> bool:
    return sigma(x) == x


def power_independence(d: FieldElement, m: int, subfield: Subfield) -> bool:
    """Whether ``1, d, ..., d^(m-1)`` are linearly independent over a subfield

    Decided by the rational rank of the products ``b_s d^k`` over the subfield basis

    :param d: Field element
    :type d: FieldElement
    :param m: Number of powers
    :type m: int
    :param subfield: Subfield of scalars
    :type subfield: Subfield

    :rtype: bool
    """
    rows = []
    power = d.field.one()
    for _ in range(m):
        rows.extend(list((b * power).coordinates) for b in subfield.basis())
        power = power * d
    return rank_over_q(rows) == m * subfield.degree
