from typing import Any, List, Optional, Sequence

import numpy as np

from ..algebras import CyclicAlgebraRing, PetitAlgebra, PetitElement, gamma
from ..errors import CoefficientsNotIntegral, InvariantViolation, ShapeMismatch
from ..exact import charpoly
from ..fields import FieldAutomorphism, FieldElement, Subfield
from ..rings import IntegralRing


class NaturalOrder():
    def __init__(self, algebra: PetitAlgebra, center: Subfield) -> None:
        """Natural order ``Λ = O_K ⊕ O_K t ⊕ ... ⊕ O_K t^(m-1)`` of a Petit algebra over a number field

        For a generalized cyclic algebra ``(D, sigma, d)`` the coefficient order is the
        ``O_K``-span of ``1, e, ..., e^(n-1)`` and ``Λ`` has the ``O_K``-basis ``e^i t^j``

        :param algebra: Petit algebra over ``O_K`` (or over ``D`` with coefficients in ``O_K``)
        :type algebra: PetitAlgebra
        :param center: Subfield whose ring of integers is the center subring (``O_F`` or ``O_F0``)
        :type center: Subfield
        """
        self.algebra = algebra
        self.center = center
        self.iterated = isinstance(algebra.ring, CyclicAlgebraRing)
        self.base = algebra.ring.base if self.iterated else algebra.ring
        self.field = self.base.field
        self.n = algebra.ring.n if self.iterated else 1
        self.m = algebra.m

    def __str__(self) -> str:
        string = "Natural order of {}".format(self.algebra.name)
        string += "\n  |-- coefficient order: {}".format(self.algebra.ring.name)
        string += "\n  |-- center subring: O_{}".format(self.center.name)
        string += "\n  |-- rank over O_K: {}".format(self.rank)
        return string

    @property
    def rank(self) -> int:
        return self.m * self.n

    def field_coefficients(self, x: PetitElement) -> List[FieldElement]:
        """The ``mn`` coefficients of ``x`` in ``O_K`` (``e``-index fastest)"""
        if self.iterated:
            return [a for y in x.coefficients for a in y]
        return list(x.coefficients)

    def from_field_coefficients(self, coefficients: Sequence[FieldElement]) -> PetitElement:
        coefficients = list(coefficients)
        if self.iterated:
            return self.algebra.element([tuple(coefficients[j * self.n:(j + 1) * self.n]) for j in range(self.m)])
        return self.algebra.element(coefficients)

    def coordinates(self, x: PetitElement) -> List[Any]:
        """Integer coordinates over the Z-basis ``b_k e^i t^j``"""
        return [c for a in self.field_coefficients(x) for c in a.coordinates]

    def from_coordinates(self, coordinates: Sequence[int]) -> PetitElement:
        degree = self.field.degree
        return self.from_field_coefficients([FieldElement(self.field, coordinates[k * degree:(k + 1) * degree])
                                             for k in range(self.rank)])

    def contains(self, x: PetitElement) -> bool:
        return all(a.is_integral() for a in self.field_coefficients(x))

    def module_basis(self) -> List[PetitElement]:
        """``O_K``-basis ``e^i t^j``"""
        one, zero = self.field.one(), self.field.zero()
        return [self.from_field_coefficients([one if k == position else zero for k in range(self.rank)])
                for position in range(self.rank)]

    def random_element(self, rng: np.random.Generator, box: int = 2) -> PetitElement:
        """Element with integer coordinates drawn uniformly from ``[-box, box]``"""
        coordinates = rng.integers(-box, box + 1, size=self.rank * self.field.degree)
        return self.from_coordinates([int(c) for c in coordinates])

    def verify_closure(self) -> None:
        """Check that products of the ``O_K``-basis stay integral and ``1`` lies in the order

        :raises InvariantViolation: With the offending basis pair
        """
        basis = self.module_basis()
        if not self.contains(self.algebra.one()):
            raise InvariantViolation("1 is not in the natural order")
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                if not self.contains(self.algebra.mul(x, y)):
                    raise InvariantViolation("Natural order is not closed under multiplication", witness=(i, j))


def natural_order(algebra: PetitAlgebra, center: Optional[Subfield] = None) -> NaturalOrder:
    """Natural order of a Petit algebra over a number field

    Example::

        >>> order = natural_order(A)
        >>> order.rank
        2

    :param algebra: Algebra over ``O_K`` (or a generalized cyclic algebra over ``O_K``)
    :type algebra: PetitAlgebra
    :param center: Center subfield, the fixed field of ``sigma`` if omitted (default: ``None``)
    :type center: Subfield, optional

    :raises CoefficientsNotIntegral: If ``f`` has a non-integral coefficient
    :raises ValueError: If the coefficient ring is not a ring of integers or no center is known

    :return: Natural order with closure verified
    :rtype: NaturalOrder
    """
    ring = algebra.ring
    base = ring.base if isinstance(ring, CyclicAlgebraRing) else ring
    if not isinstance(base, IntegralRing):
        raise ValueError("Natural orders are defined over rings of integers, got {}".format(ring.name))
    for k, c in enumerate(algebra.f.coefficients):
        values = c if isinstance(ring, CyclicAlgebraRing) else (c,)
        if not all(value.is_integral() for value in values):
            raise CoefficientsNotIntegral("Coefficient {} of the modulus is not integral".format(k),
                                          field="algebra.modulus", witness=k)
    if center is None:
        sigma = algebra.spec.sigma if algebra.spec is not None else algebra.skew_ring.sigma
        if not isinstance(sigma, FieldAutomorphism) or sigma.fixes is None:
            raise ValueError("No center subfield given and sigma declares no fixed subfield")
        center = sigma.fixes
    order = NaturalOrder(algebra, center)
    order.verify_closure()
    return order


def charpoly_annihilation_check(order: NaturalOrder, a: PetitElement) -> bool:
    """Whether the characteristic polynomial of ``γ(a)`` vanishes at ``a`` (powers ``a^(k+1) = a^k ∘ a``)

    :raises ShapeMismatch: If the algebra is not of the form ``t^m - d`` over ``O_K``
    """
    algebra = order.algebra
    if order.iterated:
        raise ShapeMismatch("The characteristic polynomial check needs an algebra t^m - d over O_K")
    coefficients = charpoly(gamma(algebra, a), algebra.ring)
    total = algebra.zero()
    power = algebra.one()
    for k, c in enumerate(coefficients):
        if k:
            power = algebra.mul(power, a)
        total = total + algebra.element([c * p for p in power.coefficients])
    return total.is_zero()
