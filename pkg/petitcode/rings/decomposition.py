from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

import math
import itertools
from dataclasses import dataclass, field

import tqdm

from petitcode import logger

from ..errors import BudgetExceeded, InvariantViolation, ZeroInverse
from ..exact import is_prime, rref_mod_p
from ..fields import Subfield
from ..utils import partitioned_search
from .base import CoefficientRing
from .quotient import FiniteQuotientRing, InducedMap


class SubRing(CoefficientRing):
    def __init__(self,
                 parent: CoefficientRing,
                 elements: Sequence[Any],
                 one: Any,
                 generators: Optional[Sequence[Any]] = None,
                 name: str = "") -> None:
        """Finite subset of a finite ring closed under its operations (with its own unit)

        Used for CRT components ``e·Q`` (unit ``e``) and fixed subrings (unit ``1``)

        :param parent: Ambient finite ring
        :type parent: CoefficientRing
        :param elements: Elements of the subring (in parent encoding)
        :type elements: sequence
        :param one: Unit of the subring
        :param generators: Additive generators, computed greedily if omitted (default: ``None``)
        :type generators: sequence, optional
        :param name: Ring name (default: ``""``)
        :type name: str, optional
        """
        super().__init__(name=name)
        self.parent = parent
        self._elements = sorted(elements, key=parent.index)
        self._positions = {x: k for k, x in enumerate(self._elements)}
        self._one = one
        self._candidates = list(generators) if generators is not None else None
        self._generators = None
        self._coordinates = None
        self._is_field = None

    def __contains__(self, a: Any) -> bool:
        return a in self._positions

    def zero(self) -> Any:
        return self.parent.zero()

    def one(self) -> Any:
        return self._one

    def add(self, a: Any, b: Any) -> Any:
        return self.parent.add(a, b)

    def neg(self, a: Any) -> Any:
        return self.parent.neg(a)

    def sub(self, a: Any, b: Any) -> Any:
        return self.parent.sub(a, b)

    def mul(self, a: Any, b: Any) -> Any:
        return self.parent.mul(a, b)

    def is_zero(self, a: Any) -> bool:
        return self.parent.is_zero(a)

    def invert(self, a: Any) -> Any:
        for b in self._elements:
            if self.parent.mul(a, b) == self._one:
                return b
        raise ZeroInverse("{} is not a unit of {}".format(self.parent.render(a), self.name))

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def characteristic(self) -> int:
        order, current = 1, self._one
        while not self.parent.is_zero(current):
            current, order = self.parent.add(current, self._one), order + 1
        return order

    def cardinality(self) -> int:
        return len(self._elements)

    def is_field(self) -> bool:
        if self._is_field is None:
            units = set()
            for a in self._elements:
                if self.parent.is_zero(a) or a in units:
                    continue
                for b in self._elements:
                    if self.parent.mul(a, b) == self._one:
                        units.update((a, b))
                        break
            self._is_field = len(self._elements) > 1 and len(units) == len(self._elements) - 1
        return self._is_field

    def elements(self) -> Iterator[Any]:
        return iter(self._elements)

    def index(self, a: Any) -> int:
        return self._positions[a]

    def element(self, index: int) -> Any:
        return self._elements[index]

    def additive_generators(self) -> List[Any]:
        if self._generators is None:
            candidates = self._candidates if self._candidates is not None else self._elements
            self._generators = _greedy_generators(self.parent, candidates)
        return self._generators

    def prime_coordinates(self) -> Optional[Tuple[int, int]]:
        p = self.characteristic
        dimension = len(self.additive_generators())
        if is_prime(p) and p ** dimension == len(self._elements):
            return p, dimension
        return None

    def coordinates(self, a: Any) -> Tuple[int, ...]:
        if self._coordinates is None:
            p, dimension = self.prime_coordinates()
            self._coordinates = {}
            for vector in itertools.product(range(p), repeat=dimension):
                self._coordinates[self.from_coordinates(vector)] = vector
        return self._coordinates[a]

    def from_coordinates(self, coordinates: Sequence[int]) -> Any:
        result = self.parent.zero()
        for c, g in zip(coordinates, self.additive_generators()):
            for _ in range(int(c) % self.characteristic):
                result = self.parent.add(result, g)
        return result

    def render(self, a: Any) -> str:
        return self.parent.render(a)


def additive_span(ring: CoefficientRing, generators: Sequence[Any]) -> List[Any]:
    """Additive subgroup generated by a list of elements of a finite ring"""
    span = {ring.zero()}
    frontier = [ring.zero()]
    while frontier:
        current = frontier.pop()
        for g in generators:
            value = ring.add(current, g)
            if value not in span:
                span.add(value)
                frontier.append(value)
    return sorted(span, key=ring.index)


def _greedy_generators(ring: CoefficientRing, elements: Sequence[Any]) -> List[Any]:
    generators, span = [], {ring.zero()}
    for x in elements:
        if x not in span:
            generators.append(x)
            span = set(additive_span(ring, generators))
    return generators


@dataclass
class RingComponent:
    idempotent: Any
    ring: SubRing

    @property
    def cardinality(self) -> int:
        return self.ring.cardinality()

    def project(self, x: Any) -> Any:
        return self.ring.parent.mul(self.idempotent, x)

    def embed(self, y: Any) -> Any:
        return y

    def is_field(self) -> bool:
        return self.ring.is_field()


def idempotents(ring: CoefficientRing, budget: int = 1000000, threads: int = 1, progress: bool = False) -> List[Any]:
    """All idempotents ``x^2 = x`` of a finite ring, by exhaustive search

    :raises BudgetExceeded: If the ring is larger than the budget
    """
    N = ring.cardinality()
    if N > budget:
        raise BudgetExceeded("idempotent search", N, budget)

    def search(start: int, stop: int) -> List[Any]:
        found = []
        for k in tqdm.tqdm(range(start, stop), disable=not progress, desc="idempotents"):
            x = ring.element(k)
            if ring.mul(x, x) == x:
                found.append(x)
        return found

    return [x for partial in partitioned_search(search, N, threads) for x in partial]


def primitive_idempotents(ring: CoefficientRing, candidates: Optional[Sequence[Any]] = None, **kwargs) -> List[Any]:
    """Nonzero idempotents ``e`` with ``f·e in {0, e}`` for every idempotent ``f``"""
    candidates = list(candidates) if candidates is not None else idempotents(ring, **kwargs)
    primitive = []
    for e in candidates:
        if ring.is_zero(e):
            continue
        if all(ring.mul(f, e) in (ring.zero(), e) for f in candidates):
            primitive.append(e)
    return primitive


def crt_decompose(ring: CoefficientRing, budget: int = 1000000, threads: int = 1, progress: bool = False) -> List[RingComponent]:
    """Decompose a finite commutative ring into local components ``e·Q``

    Example::

        >>> [component.cardinality for component in crt_decompose(Z_mod_6)]
        [2, 3]

    :param ring: Finite commutative ring
    :type ring: CoefficientRing
    :param budget: Enumeration budget (default: ``1000000``)
    :type budget: int, optional
    :param threads: Worker threads of the idempotent search (default: ``1``)
    :type threads: int, optional
    :param progress: Whether to show a progress bar (default: ``False``)
    :type progress: bool, optional

    :raises BudgetExceeded: If the ring is larger than the budget
    :raises InvariantViolation: If the primitive idempotents do not sum to 1 or the cardinalities do not multiply to ``|Q|``

    :return: Components ordered by idempotent index
    :rtype: list of RingComponent
    """
    primitive = primitive_idempotents(ring, idempotents(ring, budget, threads, progress))
    total = ring.zero()
    for e in primitive:
        total = ring.add(total, e)
    if total != ring.one():
        raise InvariantViolation("Primitive idempotents do not sum to 1", witness=primitive)

    components = []
    generators = ring.additive_generators()
    for position, e in enumerate(primitive):
        elements = {ring.mul(e, x) for x in ring.elements()}
        component_generators = [ring.mul(e, g) for g in generators]
        subring = SubRing(ring, elements, e, generators=component_generators,
                          name="{}[{}]".format(ring.name, position))
        components.append(RingComponent(e, subring))
    if math.prod(c.cardinality for c in components) != ring.cardinality():
        raise InvariantViolation("Component cardinalities do not multiply to |Q|")
    return components


def order_slots(components: Sequence[RingComponent], sigma_bar: Callable[[Any], Any]) -> List[List[RingComponent]]:
    """Group components into cycles of ``sigma_bar`` with slot order ``j -> j + 1 (mod g)``

    Each cycle starts with its component of smallest idempotent index

    :raises InvariantViolation: If ``sigma_bar`` does not permute the primitive idempotents
    """
    by_idempotent = {component.idempotent: component for component in components}
    seen, cycles = set(), []
    for component in components:
        if component.idempotent in seen:
            continue
        cycle = [component]
        seen.add(component.idempotent)
        image = sigma_bar(component.idempotent)
        while image != component.idempotent:
            if image not in by_idempotent or image in seen:
                raise InvariantViolation("The induced automorphism does not permute the components", witness=image)
            cycle.append(by_idempotent[image])
            seen.add(image)
            image = sigma_bar(image)
        cycles.append(cycle)
    return cycles


def component_orbits(components: Sequence[RingComponent], maps: Sequence[Callable[[Any], Any]]) -> List[List[RingComponent]]:
    """Orbits of the components under the group generated by several automorphisms"""
    by_idempotent = {component.idempotent: component for component in components}
    seen, orbits = set(), []
    for component in components:
        if component.idempotent in seen:
            continue
        orbit, frontier = {component.idempotent}, [component.idempotent]
        while frontier:
            e = frontier.pop()
            for m in maps:
                image = m(e)
                if image not in by_idempotent:
                    raise InvariantViolation("An induced automorphism does not permute the components", witness=image)
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
        seen.update(orbit)
        orbits.append([c for c in components if c.idempotent in orbit])
    return orbits


def fixed_subring(m: InducedMap, ring: Optional[FiniteQuotientRing] = None) -> SubRing:
    """The subring ``{x : m(x) = x}`` with the induced ring structure"""
    ring = ring if ring is not None else m.quotient
    elements = [x for x in ring.elements() if m(x) == x]
    return SubRing(ring, elements, ring.one(), name="Fix({})".format(m.name))


def nilpotent_elements(ring: CoefficientRing) -> List[Any]:
    """Nilpotent elements (including zero) of a finite ring"""
    steps = max(ring.cardinality(), 2).bit_length()
    nilpotent = []
    for x in ring.elements():
        y = x
        for _ in range(steps):
            y = ring.mul(y, y)
        if ring.is_zero(y):
            nilpotent.append(x)
    return nilpotent


def _integer_log(value: int, base: int) -> Optional[int]:
    if base < 2:
        return 0 if value == 1 else None
    k, power = 0, 1
    while power < value:
        power *= base
        k += 1
    return k if power == value else None


@dataclass
class SplittingReport:
    e: int
    f: int
    g: int
    degree: int
    component_cardinalities: List[int] = field(default_factory=list)
    center_cardinality: int = 0
    residue_cardinality: int = 0

    @property
    def consistent(self) -> bool:
        return self.e * self.f * self.g == self.degree

    @property
    def kind(self) -> str:
        if self.e > 1:
            return "ramified"
        return "inert" if self.g == 1 else "split"


def center_image(ring: FiniteQuotientRing, center: Subfield) -> SubRing:
    """Image of the ring of integers of a subfield in the quotient"""
    elements = additive_span(ring, [ring.project(b) for b in center.basis()])
    return SubRing(ring, elements, ring.one(), name="O_{}/I".format(center.name))


def splitting_report(ring: FiniteQuotientRing, center: Subfield, budget: int = 1000000,
                     components: Optional[Sequence[RingComponent]] = None) -> SplittingReport:
    """Splitting data ``(e, f, g)`` of the ideal of the center in the quotient

    :param ring: Quotient ``O_K / q^s O_K``
    :type ring: FiniteQuotientRing
    :param center: Subfield whose ring of integers contains ``q``
    :type center: Subfield
    :param budget: Enumeration budget (default: ``1000000``)
    :type budget: int, optional
    :param components: Precomputed CRT components (default: ``None``)
    :type components: list of RingComponent, optional

    :raises ValueError: If the image of the center has more than one component (``q`` is not prime)
    """
    center_ring = center_image(ring, center)
    if len(primitive_idempotents(center_ring, list(idempotents(center_ring, budget)))) != 1:
        raise ValueError("The ideal is not a prime power in O_{}".format(center.name))
    center_nilpotent = len(nilpotent_elements(center_ring))
    center_residue = center_ring.cardinality() // center_nilpotent
    exponent = _integer_log(center_ring.cardinality(), center_residue) or 1

    components = list(components) if components is not None else crt_decompose(ring, budget)
    e_values, f_values = set(), set()
    for component in components:
        nilpotent = len(nilpotent_elements(component.ring))
        residue = component.cardinality // nilpotent
        f = _integer_log(residue, center_residue)
        e = _integer_log(component.cardinality, residue)
        if f is None or e is None or e % exponent:
            raise InvariantViolation("Component of {} elements is not a power of the residue field".format(component.cardinality))
        e_values.add(e // exponent)
        f_values.add(f)
    if len(e_values) != 1 or len(f_values) != 1:
        logger.warning("Components have different splitting data (e: {}, f: {})".format(sorted(e_values), sorted(f_values)))

    report = SplittingReport(e=max(e_values), f=max(f_values), g=len(components),
                             degree=ring.field.degree // center.degree,
                             component_cardinalities=[c.cardinality for c in components],
                             center_cardinality=center_ring.cardinality(),
                             residue_cardinality=center_residue)
    if report.e > 1:
        logger.warning("Ramification detected (e = {}); only reported, not supported".format(report.e))
    if not report.consistent:
        logger.warning("efg = {} differs from the degree {}".format(report.e * report.f * report.g, report.degree))
    return report


@dataclass
class LocalRingReport:
    cardinality: int
    units: int
    maximal_ideal: int
    residue_cardinality: int
    is_local: bool


def local_ring_report(ring: CoefficientRing) -> LocalRingReport:
    """Classify units and non-units; the ring is local iff the non-units are closed under addition"""
    non_units = [x for x in ring.elements() if not ring.is_unit(x)]
    members = set(non_units)
    is_local = all(ring.add(a, b) in members for a in non_units for b in non_units)
    N = ring.cardinality()
    return LocalRingReport(cardinality=N, units=N - len(non_units), maximal_ideal=len(non_units),
                           residue_cardinality=N // len(non_units) if non_units else N, is_local=is_local)


def powers_rank(ring: CoefficientRing, c: Any, k: int) -> int:
    """Rank over the prime field of ``1, c, ..., c^(k-1)``

    :raises ValueError: If the ring has no prime field coordinates
    """
    coordinates = ring.prime_coordinates()
    if coordinates is None:
        raise ValueError("{} has no coordinates over a prime field".format(ring.name))
    rows, power = [], ring.one()
    for _ in range(k):
        rows.append(list(ring.coordinates(power)))
        power = ring.mul(power, c)
    return len(rref_mod_p(rows, coordinates[0], coordinates[1]))
