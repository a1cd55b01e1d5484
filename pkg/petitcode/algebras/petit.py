from typing import Any, Iterator, List, Optional, Sequence

import enum
from dataclasses import dataclass

import numpy as np

from petitcode import logger

from ..errors import ConfigError, NonMonicModulus
from ..exact import is_prime
from ..fields import FieldAutomorphism, is_fixed_by, power_independence
from ..rings import IntegralRing
from ..skew import SkewPoly, SkewPolyRing


class PetitElement():
    __slots__ = ("algebra", "coefficients")

    def __init__(self, algebra: "PetitAlgebra", coefficients: Sequence[Any]) -> None:
        """Element ``x_0 + x_1 t + ... + x_(m-1) t^(m-1)`` of a Petit algebra"""
        self.algebra = algebra
        ring = algebra.ring
        coefficients = list(coefficients)
        if len(coefficients) > algebra.m:
            raise ValueError("Element has {} coefficients, the algebra has dimension {}" \
                .format(len(coefficients), algebra.m))
        self.coefficients = tuple(coefficients + [ring.zero()] * (algebra.m - len(coefficients)))

    def __add__(self, other: "PetitElement") -> "PetitElement":
        ring = self.algebra.ring
        return PetitElement(self.algebra, [ring.add(a, b) for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self) -> "PetitElement":
        return PetitElement(self.algebra, [self.algebra.ring.neg(a) for a in self.coefficients])

    def __sub__(self, other: "PetitElement") -> "PetitElement":
        return self + (-other)

    def __mul__(self, other: "PetitElement") -> "PetitElement":
        return self.algebra.mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PetitElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        return all(self.algebra.ring.is_zero(a) for a in self.coefficients)

    def poly(self) -> SkewPoly:
        return self.algebra.skew_ring.poly(self.coefficients)

    def __repr__(self) -> str:
        return "PetitElement({})".format(self)

    def __str__(self) -> str:
        return str(self.poly())


class DivisionStatus(enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass
class DivisionReport:
    status: DivisionStatus
    reason: str
    witness: Any = None
    provenance: Optional[str] = None

    @property
    def is_division(self) -> Optional[bool]:
        if self.status == DivisionStatus.UNKNOWN:
            return None
        return self.status == DivisionStatus.PROVED


class PetitAlgebra():
    def __init__(self, skew_ring: SkewPolyRing, f: SkewPoly, name: str = "") -> None:
        """Petit algebra ``S_f = R / R f`` with multiplication ``g ∘ h = g h mod_r f``

        Elements are skew polynomials of degree less than ``m = deg f``.  The modulus is
        stored exactly as given

        :param skew_ring: Skew polynomial ring ``R = S[t; sigma, delta]``
        :type skew_ring: SkewPolyRing
        :param f: Monic modulus of degree ``m >= 2``
        :type f: SkewPoly
        :param name: Algebra name used in reports (default: ``""``)
        :type name: str, optional
        """
        self.skew_ring = skew_ring
        self.ring = skew_ring.ring
        self.f = f
        self.m = f.degree
        self.name = name or "S_f"
        self.spec = None
        self._associative = None

    def __str__(self) -> str:
        string = "Petit algebra: {}".format(self.name)
        string += "\n  |-- coefficient ring: {}".format(self.ring.name)
        string += "\n  |-- modulus: {}".format(self.f)
        if self.ring.is_finite:
            string += "\n  |-- cardinality: {}".format(self.cardinality())
        return string

    # elements

    def element(self, coefficients: Sequence[Any]) -> PetitElement:
        return PetitElement(self, coefficients)

    def zero(self) -> PetitElement:
        return PetitElement(self, [])

    def one(self) -> PetitElement:
        return PetitElement(self, [self.ring.one()])

    def t(self, k: int = 1) -> PetitElement:
        return self.from_poly(self.skew_ring.t(k))

    def constant(self, a: Any) -> PetitElement:
        return PetitElement(self, [a])

    def from_poly(self, g: SkewPoly) -> PetitElement:
        return PetitElement(self, self.skew_ring.mod_r(g, self.f).coefficients)

    def additive_basis(self) -> List[PetitElement]:
        """Additive generators ``a t^j`` for the additive generators ``a`` of the coefficient ring"""
        generators = self.ring.additive_generators()
        return [PetitElement(self, [self.ring.zero()] * j + [a]) for j in range(self.m) for a in generators]

    def vector(self, x: PetitElement) -> List[int]:
        """Coordinates over the prime field (coefficient coordinates concatenated, ``x_0`` first)"""
        return [c for a in x.coefficients for c in self.ring.coordinates(a)]

    def from_vector(self, vector: Sequence[int]) -> PetitElement:
        _, dimension = self.ring.prime_coordinates()
        return PetitElement(self, [self.ring.from_coordinates(vector[j * dimension:(j + 1) * dimension])
                                   for j in range(self.m)])

    def prime_dimension(self) -> Optional[int]:
        coordinates = self.ring.prime_coordinates()
        return None if coordinates is None else coordinates[1] * self.m

    # arithmetic

    def mul(self, x: PetitElement, y: PetitElement) -> PetitElement:
        """``x ∘ y = x y mod_r f``"""
        return self.from_poly(self.skew_ring.skew_mul(x.poly(), y.poly()))

    def associator(self, x: PetitElement, y: PetitElement, z: PetitElement) -> PetitElement:
        """``[x, y, z] = (x y) z - x (y z)``"""
        return self.mul(self.mul(x, y), z) - self.mul(x, self.mul(y, z))

    def power(self, x: PetitElement, k: int) -> PetitElement:
        """Left-to-right power ``x^(k+1) = x^k ∘ x``"""
        result = self.one()
        for _ in range(k):
            result = self.mul(result, x)
        return result

    # structure

    def is_associative(self) -> bool:
        """Exhaustive on additive basis triples for finite coefficient rings, invariance of ``f`` otherwise"""
        if self._associative is None:
            if self.ring.is_finite and self.ring.prime_coordinates() is not None:
                from .structure import associator_tensor, structure_tensor
                self._associative = not associator_tensor(*structure_tensor(self)).any()
            elif self.ring.is_finite:
                basis = self.additive_basis()
                self._associative = all(self.associator(x, y, z).is_zero() for x in basis for y in basis for z in basis)
            else:
                self._associative = self.skew_ring.is_invariant(self.f)
        return self._associative

    def cardinality(self) -> int:
        return self.ring.cardinality() ** self.m

    def elements(self) -> Iterator[PetitElement]:
        for index in range(self.cardinality()):
            yield self.element_at(index)

    def element_at(self, index: int) -> PetitElement:
        N = self.ring.cardinality()
        coefficients = []
        for _ in range(self.m):
            index, k = divmod(index, N)
            coefficients.append(self.ring.element(k))
        return PetitElement(self, coefficients)

    def index(self, x: PetitElement) -> int:
        N = self.ring.cardinality()
        return sum(self.ring.index(a) * N ** j for j, a in enumerate(x.coefficients))

    def random_element(self, rng: np.random.Generator) -> PetitElement:
        return PetitElement(self, [self.ring.random_element(rng) for _ in range(self.m)])

    def is_cyclic_form(self) -> bool:
        """Whether ``f = t^m - d`` over a zero derivation"""
        return self.skew_ring.delta is None and all(self.ring.is_zero(c) for c in self.f.coefficients[1:-1])

    def cyclic_parameter(self) -> Any:
        """``d`` with ``f = t^m - d``"""
        if not self.is_cyclic_form():
            raise ValueError("{} is not of the form t^m - d".format(self.f))
        return self.ring.neg(self.f.coefficient(0))


def make_petit(skew_ring: SkewPolyRing, f: SkewPoly, name: str = "") -> PetitAlgebra:
    """Construct the Petit algebra ``S_f``

    Example::

        >>> A = make_petit(R, R.t(2) - R.constant(w))
        >>> A.cardinality(), A.is_associative()
        (16, False)

    :param skew_ring: Skew polynomial ring
    :type skew_ring: SkewPolyRing
    :param f: Modulus
    :type f: SkewPoly

    :raises NonMonicModulus: If ``f`` is not monic
    :raises ConfigError: If ``deg f < 2``

    :return: Petit algebra
    :rtype: PetitAlgebra
    """
    if f.parent is not skew_ring:
        raise ValueError("Modulus belongs to another skew polynomial ring")
    if not f.is_monic():
        raise NonMonicModulus("The modulus {} is not monic".format(f), field="modulus")
    if f.degree < 2:
        raise ConfigError("The modulus must have degree >= 2, got {}".format(f.degree), field="modulus")
    return PetitAlgebra(skew_ring, f, name=name)


def cyclic_modulus(skew_ring: SkewPolyRing, d: Any, m: int) -> SkewPoly:
    """``t^m - d``"""
    return skew_ring.t(m) - skew_ring.constant(d)


def is_division(algebra: PetitAlgebra,
                assertion: Optional[dict] = None,
                budget: int = 1000000,
                threads: int = 1,
                progress: bool = False) -> DivisionReport:
    """Three-valued division status

    Finite fields: decided by irreducibility of ``f``.  Other finite rings: refuted (the
    coefficient ring has zero divisors).  Number fields with ``f = t^m - d``: proved when
    ``m`` is prime and ``d`` is not fixed by ``sigma``, or when ``1, d, ..., d^(m-1)`` are
    linearly independent over the fixed field; otherwise the configured assertion is used

    :param algebra: Petit algebra
    :type algebra: PetitAlgebra
    :param assertion: Configured ``{status, provenance}`` block (default: ``None``)
    :type assertion: dict, optional
    :param budget: Largest number of right factor candidates (default: ``1000000``)
    :type budget: int, optional

    :raises BudgetExceeded: If the factor search exceeds the budget

    :return: Division report
    :rtype: DivisionReport
    """
    ring = algebra.ring
    skew_ring = algebra.skew_ring
    report = None
    if ring.is_finite:
        if ring.is_field():
            factor = skew_ring.find_right_factor(algebra.f, budget=budget, threads=threads, progress=progress)
            if factor is None:
                report = DivisionReport(DivisionStatus.PROVED, "f is irreducible")
            else:
                report = DivisionReport(DivisionStatus.REFUTED, "f has the right factor {}".format(factor[0]),
                                        witness=factor)
        else:
            report = DivisionReport(DivisionStatus.REFUTED, "the coefficient ring {} is not a field".format(ring.name))
    elif isinstance(ring, IntegralRing) and algebra.is_cyclic_form() and isinstance(skew_ring.sigma, FieldAutomorphism):
        sigma = skew_ring.sigma
        d = algebra.cyclic_parameter()
        m = algebra.m
        fixed = sigma.fixes
        if is_prime(m) and not is_fixed_by(d, sigma):
            report = DivisionReport(DivisionStatus.PROVED, "m = {} is prime and d is not fixed by {}".format(m, sigma.name))
        elif fixed is not None and power_independence(d, m, fixed):
            report = DivisionReport(DivisionStatus.PROVED,
                                    "1, d, ..., d^{} are linearly independent over {}".format(m - 1, fixed.name))

    if report is None:
        if assertion and assertion.get("status"):
            status = DivisionStatus(assertion["status"])
            report = DivisionReport(status, "asserted by configuration", provenance=assertion.get("provenance"))
        else:
            report = DivisionReport(DivisionStatus.UNKNOWN, "no sufficient criterion applies")
    logger.info("Division status of {}: {} ({})".format(algebra.name, report.status.value, report.reason))
    return report

