from typing import Any, List, Optional

import math
from dataclasses import dataclass, field

import numpy as np

from petitcode import logger

from ..algebras import CyclicAlgebraRing, PetitAlgebra, PetitElement, make_iterated, make_petit
from ..errors import ConfigError, InvariantViolation, NotWellDefined
from ..fields import FieldElement, IntegralIdeal
from ..rings import (FiniteQuotientRing, InducedMap, RingComponent, SubRing, build_quotient, component_orbits,
                     crt_decompose, induce_map, order_slots)
from ..skew import SkewPolyRing
from .natural import NaturalOrder


class QuotientAlgebra():
    def __init__(self,
                 order: NaturalOrder,
                 ideal: IntegralIdeal,
                 quotient_ring: FiniteQuotientRing,
                 target: PetitAlgebra,
                 sigma_bar: InducedMap,
                 delta_bar: Optional[InducedMap] = None,
                 rho_bar: Optional[InducedMap] = None) -> None:
        """Quotient ``Λ / IΛ`` realised as a Petit algebra over ``O_K / I·O_K``

        :param order: Source natural order
        :type order: NaturalOrder
        :param ideal: Ideal of the center subring (exponent already applied)
        :type ideal: IntegralIdeal
        :param quotient_ring: Coefficient quotient ``O_K / I·O_K``
        :type quotient_ring: FiniteQuotientRing
        :param target: Petit algebra with the reduced modulus
        :type target: PetitAlgebra
        :param sigma_bar: Induced automorphism of the outer skew polynomial ring
        :type sigma_bar: InducedMap
        :param delta_bar: Induced derivation (default: ``None``)
        :type delta_bar: InducedMap, optional
        :param rho_bar: Induced automorphism of ``D`` for generalized cyclic algebras (default: ``None``)
        :type rho_bar: InducedMap, optional
        """
        self.order = order
        self.ideal = ideal
        self.quotient_ring = quotient_ring
        self.target = target
        self.sigma_bar = sigma_bar
        self.delta_bar = delta_bar
        self.rho_bar = rho_bar

    def __str__(self) -> str:
        string = "Quotient algebra: {} / <{}>".format(self.order.algebra.name, self.ideal)
        string += "\n  |-- coefficient quotient: {} ({} elements)".format(self.quotient_ring.name,
                                                                         self.quotient_ring.cardinality())
        string += "\n  |-- modulus: {}".format(self.target.f)
        string += "\n  |-- cardinality: {}".format(self.cardinality())
        return string

    def cardinality(self) -> int:
        return self.target.cardinality()

    def _project(self, a: FieldElement) -> int:
        return self.quotient_ring.project(a)

    def psi(self, x: PetitElement) -> PetitElement:
        """Reduction ``Λ -> Λ / IΛ`` of every coordinate"""
        if self.order.iterated:
            return self.target.element([tuple(self._project(a) for a in y) for y in x.coefficients])
        return self.target.element([self._project(a) for a in x.coefficients])

    def lift(self, y: PetitElement) -> PetitElement:
        """Canonical preimage (least nonnegative residues in the Smith-normal-form boxes)"""
        lift = self.quotient_ring.lift
        if self.order.iterated:
            return self.order.algebra.element([tuple(lift(a) for a in z) for z in y.coefficients])
        return self.order.algebra.element([lift(a) for a in y.coefficients])

    def in_ideal_lattice(self, x: PetitElement) -> bool:
        """Whether every ``O_K`` coordinate of ``x`` lies in ``I·O_K`` (membership in ``IΛ``)"""
        return all(self.ideal.contains(a) for a in self.order.field_coefficients(x))

    def scaled(self, g: FieldElement, x: PetitElement) -> PetitElement:
        """``g·x`` coordinate-wise, an element of ``IΛ`` for a generator ``g`` of ``I``"""
        return self.order.from_field_coefficients([g * a for a in self.order.field_coefficients(x)])

    def verify_homomorphism(self, rng: np.random.Generator, samples: int = 500, box: int = 2) -> None:
        """Check additivity and multiplicativity of ``psi`` and ``psi(1) = 1`` on random pairs

        :raises InvariantViolation: With the index of the first failing pair
        """
        if self.psi(self.order.algebra.one()) != self.target.one():
            raise InvariantViolation("psi(1) != 1")
        algebra = self.order.algebra
        for k in range(samples):
            x, y = self.order.random_element(rng, box), self.order.random_element(rng, box)
            if self.psi(x + y) != self.psi(x) + self.psi(y):
                raise InvariantViolation("psi is not additive", witness=k)
            if self.psi(algebra.mul(x, y)) != self.target.mul(self.psi(x), self.psi(y)):
                raise InvariantViolation("psi is not multiplicative", witness=k)

    def verify_kernel(self, rng: np.random.Generator, samples: int = 500, box: int = 2) -> None:
        """Check ``psi(x) = 0`` iff ``x`` lies in ``IΛ`` on random elements and random members of ``IΛ``

        :raises InvariantViolation: With the index of the first disagreement
        """
        generators = self.ideal.generators
        for k in range(samples):
            x = self.order.random_element(rng, box)
            if k % 2:
                x = self.scaled(generators[int(rng.integers(len(generators)))], x)
            if self.psi(x).is_zero() != self.in_ideal_lattice(x):
                raise InvariantViolation("Kernel of psi differs from IΛ", witness=k)

    def verify_center_intersection(self, rng: np.random.Generator, samples: int = 100, box: int = 3) -> None:
        """Check ``IΛ ∩ O_F = I`` on the ideal generators and random center elements

        :raises InvariantViolation: With the offending element
        """
        center = self.order.center
        candidates = list(self.ideal.generators)
        for k in range(samples):
            z = center.element([int(c) for c in rng.integers(-box, box + 1, size=center.degree)])
            if k % 2:
                z = z * self.ideal.generators[int(rng.integers(len(self.ideal.generators)))]
            candidates.append(z)
        for z in candidates:
            if self.quotient_ring.is_zero(self._project(z)) != self.ideal.contains_in_subring(z):
                raise InvariantViolation("IΛ ∩ O_{} differs from I".format(center.name), witness=str(z))


def reduce_mod(order: NaturalOrder,
               ideal: IntegralIdeal,
               exponent: int = 1,
               samples: int = 500,
               seed: int = 42,
               table_limit: int = 1024) -> QuotientAlgebra:
    """Reduce a natural order modulo an ideal of its center subring

    The coefficient quotient is built first and the automorphisms (and derivation) are
    induced on it; the target is the Petit algebra of the reduced modulus (or the
    generalized cyclic algebra of the reduced data)

    Example::

        >>> Q = reduce_mod(order, IntegralIdeal(F, [1 + i]))
        >>> Q.cardinality()
        16

    :param order: Natural order
    :type order: NaturalOrder
    :param ideal: Nonzero ideal of the center subring
    :type ideal: IntegralIdeal
    :param exponent: Power of the ideal (default: ``1``)
    :type exponent: int, optional
    :param samples: Random pairs for the homomorphism and kernel checks, 0 to skip (default: ``500``)
    :type samples: int, optional
    :param seed: Seed of the verification sampler (default: ``42``)
    :type seed: int, optional
    :param table_limit: Largest coefficient quotient with precomputed tables (default: ``1024``)
    :type table_limit: int, optional

    :raises ZeroIdeal: If the ideal is zero
    :raises NotWellDefined: If an automorphism or the derivation does not stabilize ``I·O_K``
    :raises ConfigError: If the ideal does not belong to the center subring
    :raises InvariantViolation: If a verification sample fails

    :return: Quotient algebra
    :rtype: QuotientAlgebra
    """
    if not all(order.center.contains(g) for g in ideal.generators):
        raise ConfigError("The ideal generators must lie in O_{}".format(order.center.name), field="ideal.generators")
    if not ideal.is_principal():
        logger.warning("Non-principal ideal {}: support is experimental".format(ideal))
    if exponent > 1:
        ideal = ideal.power(exponent)
    Q = build_quotient(order.field, ideal, table_limit=table_limit)
    algebra = order.algebra
    name = "{} / <{}>".format(algebra.name, ideal)

    rho_bar, delta_bar = None, None
    if order.iterated:
        spec = algebra.spec
        rho_bar = induce_map(spec.rho, Q)
        sigma_bar = induce_map(spec.sigma, Q)
        target = make_iterated(Q, rho_bar, Q.project(spec.c), spec.n, sigma_bar, Q.project(spec.d), spec.m, name=name)
    else:
        skew_ring = algebra.skew_ring
        sigma_bar = induce_map(skew_ring.sigma, Q)
        if skew_ring.delta is not None:
            delta_bar = induce_map(skew_ring.delta, Q, sigma_bar)
        reduced = SkewPolyRing(Q, sigma_bar, delta_bar)
        target = make_petit(reduced, reduced.poly([Q.project(c) for c in algebra.f.coefficients]), name=name)

    quotient = QuotientAlgebra(order, ideal, Q, target, sigma_bar, delta_bar=delta_bar, rho_bar=rho_bar)
    expected = Q.cardinality() ** order.rank
    if quotient.cardinality() != expected:
        raise InvariantViolation("|Λ/IΛ| = {}, expected {}".format(quotient.cardinality(), expected))
    if samples:
        rng = np.random.default_rng(seed)
        quotient.verify_homomorphism(rng, samples)
        quotient.verify_kernel(rng, samples)
        quotient.verify_center_intersection(rng)
    logger.info("Reduced {}: {} elements".format(algebra.name, quotient.cardinality()))
    return quotient


@dataclass
class ComponentAlgebra:
    algebra: PetitAlgebra
    idempotent: Any
    cycles: List[List[RingComponent]] = field(default_factory=list)

    @property
    def cardinality(self) -> int:
        return self.algebra.cardinality()

    @property
    def slots(self) -> int:
        """Number of CRT components permuted by the induced automorphism (``g``)"""
        return sum(len(cycle) for cycle in self.cycles)

    @property
    def split(self) -> bool:
        return self.slots > 1


@dataclass
class DecompositionReport:
    components: List[ComponentAlgebra]
    ring_components: List[RingComponent]
    cardinality: int

    @property
    def component_cardinalities(self) -> List[int]:
        return [component.cardinality for component in self.components]


def _restrict_derivation(delta_bar: InducedMap, subring: SubRing) -> InducedMap:
    for g in subring.additive_generators():
        if delta_bar(g) not in subring:
            raise NotWellDefined("{} does not preserve the component {}".format(delta_bar.name, subring.name),
                                 field="algebra.delta", witness=g)
    return delta_bar


def project_component(quotient: QuotientAlgebra, component: ComponentAlgebra, y: PetitElement) -> PetitElement:
    """Image of an element of ``Λ / IΛ`` in a component algebra (multiplication by the orbit idempotent)"""
    ring = quotient.quotient_ring
    e = component.idempotent
    if quotient.order.iterated:
        return component.algebra.element([tuple(ring.mul(e, a) for a in z) for z in y.coefficients])
    return component.algebra.element([ring.mul(e, a) for a in y.coefficients])


def slot_permutation_holds(cycle: List[RingComponent], sigma_bar: InducedMap) -> bool:
    """Whether ``sigma_bar`` maps slot ``j`` onto slot ``j + 1 (mod g)``"""
    ring = sigma_bar.quotient
    g = len(cycle)
    for j, component in enumerate(cycle):
        following = cycle[(j + 1) % g]
        if sigma_bar(component.idempotent) != following.idempotent:
            return False
        for x in component.ring.additive_generators():
            image = sigma_bar(x)
            if ring.mul(following.idempotent, image) != image:
                return False
    return True


def decompose_quotient(quotient: QuotientAlgebra,
                       budget: int = 1000000,
                       threads: int = 1,
                       progress: bool = False) -> DecompositionReport:
    """Decompose ``Λ / IΛ`` into a product of Petit algebras over the local factors of ``O_K / I·O_K``

    CRT components of the coefficient quotient are grouped into orbits of the induced
    automorphisms; each orbit carries one component algebra with modulus ``e·f`` over
    ``e·(O_K / I·O_K)`` for the orbit idempotent ``e``.  The components of an orbit are
    ordered in slots permuted cyclically by ``sigma_bar``

    :param quotient: Quotient algebra
    :type quotient: QuotientAlgebra
    :param budget: Largest coefficient quotient to enumerate (default: ``1000000``)
    :type budget: int, optional
    :param threads: Worker threads of the idempotent search (default: ``1``)
    :type threads: int, optional
    :param progress: Whether to show progress bars (default: ``False``)
    :type progress: bool, optional

    :raises BudgetExceeded: If the coefficient quotient exceeds the budget
    :raises InvariantViolation: If the component cardinalities do not multiply to ``|Λ / IΛ|``

    :return: Component algebras with their slot structure
    :rtype: DecompositionReport
    """
    Q = quotient.quotient_ring
    target = quotient.target
    ring_components = crt_decompose(Q, budget=budget, threads=threads, progress=progress)
    maps = [quotient.sigma_bar] + ([quotient.rho_bar] if quotient.rho_bar is not None else [])
    orbits = component_orbits(ring_components, maps)
    generators = Q.additive_generators()

    components = []
    for position, orbit in enumerate(orbits):
        e = Q.zero()
        for component in orbit:
            e = Q.add(e, component.idempotent)
        subring = SubRing(Q, {Q.mul(e, x) for x in Q.elements()}, e, generators=[Q.mul(e, x) for x in generators],
                          name="{}[{}]".format(Q.name, position))
        name = "{} [{}]".format(target.name, position)
        if quotient.order.iterated:
            spec = target.spec
            algebra = make_iterated(subring, spec.rho, Q.mul(e, spec.c), spec.n, spec.sigma, Q.mul(e, spec.d), spec.m,
                                    name=name)
        else:
            delta_bar = None
            if quotient.delta_bar is not None:
                delta_bar = _restrict_derivation(quotient.delta_bar, subring)
            skew_ring = SkewPolyRing(subring, quotient.sigma_bar, delta_bar)
            algebra = make_petit(skew_ring, skew_ring.poly([Q.mul(e, c) for c in target.f.coefficients]), name=name)
        components.append(ComponentAlgebra(algebra, e, order_slots(orbit, quotient.sigma_bar)))

    total = math.prod(component.cardinality for component in components)
    if total != target.cardinality():
        raise InvariantViolation("Component cardinalities multiply to {}, expected {}".format(total, target.cardinality()))
    logger.info("Decomposed {}: {} component(s) over {} local factor(s)".format(target.name, len(components),
                                                                              len(ring_components)))
    return DecompositionReport(components=components, ring_components=ring_components, cardinality=total)
