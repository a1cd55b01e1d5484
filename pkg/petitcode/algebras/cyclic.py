from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

from dataclasses import dataclass

import numpy as np

from ..errors import SpecMismatch, ZeroInverse
from ..exact import det_exact
from ..rings import CoefficientRing
from ..skew import SkewPolyRing
from .petit import PetitAlgebra, PetitElement, cyclic_modulus, make_petit


class CyclicAlgebraRing(CoefficientRing):
    def __init__(self, inner: PetitAlgebra, name: str = "") -> None:
        """Associative cyclic algebra ``D = K[e; rho] / (e^n - c)`` used as a coefficient ring

        Elements are tuples ``(x_0, ..., x_(n-1))`` of coefficient ring elements standing for
        ``x_0 + x_1 e + ... + x_(n-1) e^(n-1)``

        :param inner: Associative Petit algebra ``(K/F, rho, c)``
        :type inner: PetitAlgebra
        :param name: Ring name (default: ``"D"``)
        :type name: str, optional

        :raises SpecMismatch: If the inner algebra is not of the form ``e^n - c`` or not associative
        """
        super().__init__(name=name or "D")
        if not inner.is_cyclic_form():
            raise SpecMismatch("The inner algebra must be of the form e^n - c", field="algebra.iterated")
        if not inner.is_associative():
            raise SpecMismatch("The inner algebra {} is not associative (c is not fixed by {})" \
                .format(inner.name, getattr(inner.skew_ring.sigma, "name", "rho")), field="algebra.iterated.c")
        self.inner = inner
        self.base = inner.ring
        self.n = inner.m

    def __str__(self) -> str:
        string = super().__str__()
        string += "\n  |-- inner algebra: {}".format(self.inner.f)
        return string

    def _element(self, a: Sequence[Any]) -> PetitElement:
        return self.inner.element(a)

    def zero(self) -> Tuple[Any, ...]:
        return (self.base.zero(),) * self.n

    def one(self) -> Tuple[Any, ...]:
        return (self.base.one(),) + (self.base.zero(),) * (self.n - 1)

    def scalar(self, a: Any) -> Tuple[Any, ...]:
        return (a,) + (self.base.zero(),) * (self.n - 1)

    def add(self, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(self.base.neg(x) for x in a)

    def sub(self, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def mul(self, a: Sequence[Any], b: Sequence[Any]) -> Tuple[Any, ...]:
        return self.inner.mul(self._element(a), self._element(b)).coefficients

    def is_zero(self, a: Sequence[Any]) -> bool:
        return all(self.base.is_zero(x) for x in a)

    def gamma(self, a: Sequence[Any]) -> List[List[Any]]:
        """Right multiplication matrix of ``a`` in ``D`` over the coefficient ring"""
        from .representation import right_matrix
        return right_matrix(self.inner, self._element(a))

    def invert(self, a: Sequence[Any]) -> Tuple[Any, ...]:
        """Solve ``u a = 1`` by Cramer's rule on the right multiplication matrix

        :raises ZeroInverse: If the determinant is not a unit
        """
        base = self.base
        M = self.gamma(a)
        det = det_exact(M, base)
        try:
            det_inverse = base.invert(det)
        except ZeroInverse:
            raise ZeroInverse("{} is not a unit of {}".format(self.render(a), self.name))
        unit = [base.one()] + [base.zero()] * (self.n - 1)
        u = []
        for i in range(self.n):
            replaced = [[unit[r] if c == i else M[r][c] for c in range(self.n)] for r in range(self.n)]
            u.append(base.mul(det_exact(replaced, base), det_inverse))
        u = tuple(u)
        if self.mul(u, a) != self.one():
            raise ZeroInverse("{} has no two-sided inverse".format(self.render(a)))
        return u

    # structure

    @property
    def is_finite(self) -> bool:
        return self.base.is_finite

    @property
    def is_commutative(self) -> bool:
        return False

    @property
    def characteristic(self) -> Optional[int]:
        return self.base.characteristic

    def is_field(self) -> bool:
        return False

    def is_domain(self) -> bool:
        return False

    def cardinality(self) -> Optional[int]:
        return self.base.cardinality() ** self.n if self.base.is_finite else None

    def elements(self) -> Iterator[Tuple[Any, ...]]:
        for index in range(self.cardinality()):
            yield self.element(index)

    def index(self, a: Sequence[Any]) -> int:
        N = self.base.cardinality()
        return sum(self.base.index(x) * N ** k for k, x in enumerate(a))

    def element(self, index: int) -> Tuple[Any, ...]:
        N = self.base.cardinality()
        coefficients = []
        for _ in range(self.n):
            index, k = divmod(index, N)
            coefficients.append(self.base.element(k))
        return tuple(coefficients)

    def additive_generators(self) -> List[Tuple[Any, ...]]:
        zero = self.base.zero()
        return [tuple(g if k == j else zero for k in range(self.n))
                for j in range(self.n) for g in self.base.additive_generators()]

    def random_element(self, rng: np.random.Generator) -> Tuple[Any, ...]:
        return tuple(self.base.random_element(rng) for _ in range(self.n))

    def prime_coordinates(self) -> Optional[Tuple[int, int]]:
        coordinates = self.base.prime_coordinates()
        return None if coordinates is None else (coordinates[0], coordinates[1] * self.n)

    def coordinates(self, a: Sequence[Any]) -> Tuple[int, ...]:
        return tuple(c for x in a for c in self.base.coordinates(x))

    def from_coordinates(self, coordinates: Sequence[int]) -> Tuple[Any, ...]:
        _, r = self.base.prime_coordinates()
        return tuple(self.base.from_coordinates(coordinates[k * r:(k + 1) * r]) for k in range(self.n))

    def render(self, a: Sequence[Any]) -> str:
        return "<{}>".format(", ".join(self.base.render(x) for x in a))


class CoefficientwiseMap():
    def __init__(self, ring: CyclicAlgebraRing, phi: Callable[[Any], Any], name: str = "") -> None:
        """Extension of a map of ``K`` to ``D``: ``x_0 + x_1 e + ... -> phi(x_0) + phi(x_1) e + ...``"""
        self.ring = ring
        self.phi = phi
        self.name = name or getattr(phi, "name", "phi")

    def __repr__(self) -> str:
        return "CoefficientwiseMap({})".format(self.name)

    def __call__(self, a: Sequence[Any]) -> Tuple[Any, ...]:
        return tuple(self.phi(x) for x in a)


@dataclass
class GeneralizedCyclicSpec:
    rho: Any
    c: Any
    sigma: Any
    d: Any
    n: int
    m: int


def _order_on(ring: CoefficientRing, phi: Callable[[Any], Any], limit: int = 64) -> Optional[int]:
    generators = ring.additive_generators()
    images = list(generators)
    for k in range(1, limit + 1):
        images = [phi(x) for x in images]
        if images == list(generators):
            return k
    return None


def validate_generalized_cyclic(ring: CoefficientRing, rho: Callable[[Any], Any], c: Any,
                                sigma: Callable[[Any], Any], m: Optional[int] = None) -> int:
    """Check that ``sigma`` commutes with ``rho`` and fixes ``c``; return the order of ``sigma``

    :raises SpecMismatch: If the data is inconsistent
    """
    for i, x in enumerate(ring.additive_generators()):
        if sigma(rho(x)) != rho(sigma(x)):
            raise SpecMismatch("sigma and rho do not commute", field="algebra.iterated", witness=i)
    if sigma(c) != c:
        raise SpecMismatch("sigma does not fix c", field="algebra.iterated.c")
    order = _order_on(ring, sigma)
    if order is None or (m is not None and order != m):
        raise SpecMismatch("sigma has order {}, expected {}".format(order, m), field="algebra.sigma")
    return order


def make_iterated(ring: CoefficientRing,
                  rho: Callable[[Any], Any],
                  c: Any,
                  n: int,
                  sigma: Callable[[Any], Any],
                  d: Any,
                  m: Optional[int] = None,
                  name: str = "") -> PetitAlgebra:
    """Generalized nonassociative cyclic algebra ``(D, sigma, d)`` with ``D = (K/F, rho, c)``

    Example::

        >>> A = make_iterated(O_K, rho, -1, 2, tau, omega)
        >>> A.m, A.ring.n
        (3, 2)

    :param ring: Coefficient ring of ``D`` (``O_K`` or its quotient)
    :type ring: CoefficientRing
    :param rho: Automorphism of order ``n`` defining ``D``
    :param c: Element fixed by ``rho`` with ``e^n = c``
    :param n: Degree of ``D``
    :type n: int
    :param sigma: Automorphism commuting with ``rho`` and fixing ``c``, applied coefficient-wise on ``D``
    :param d: Invertible element of the coefficient ring, ``t^m = d``
    :param m: Order of ``sigma`` (detected if omitted) (default: ``None``)
    :type m: int, optional

    :raises SpecMismatch: If the data is inconsistent or ``d`` is not invertible in ``D``

    :return: Petit algebra over ``D`` with its ``spec`` attribute set
    :rtype: PetitAlgebra
    """
    m = validate_generalized_cyclic(ring, rho, c, sigma, m)
    inner_ring = SkewPolyRing(ring, rho)
    inner = make_petit(inner_ring, cyclic_modulus(inner_ring, c, n), name="({}, {}, {})".format(
        ring.name, getattr(rho, "name", "rho"), ring.render(c)))
    D = CyclicAlgebraRing(inner)
    d_D = D.scalar(d)
    if not D.is_unit(d_D):
        raise SpecMismatch("d = {} is not invertible in D".format(ring.render(d)), field="algebra.iterated.d")
    sigma_D = CoefficientwiseMap(D, sigma, name=getattr(sigma, "name", "sigma"))
    outer_ring = SkewPolyRing(D, sigma_D)
    algebra = make_petit(outer_ring, cyclic_modulus(outer_ring, d_D, m), name=name or "(D, {}, {})".format(
        sigma_D.name, ring.render(d)))
    algebra.spec = GeneralizedCyclicSpec(rho=rho, c=c, sigma=sigma, d=d, n=n, m=m)
    return algebra


@dataclass
class CyclicQuotientReport:
    cardinality: int
    split: bool
    zero_divisor: Optional[Tuple[Any, Any]]
    fix_rho: int
    fix_sigma: int


def cyclic_quotient_report(algebra: PetitAlgebra, budget: int = 1000000) -> CyclicQuotientReport:
    """Splitness of the finite coefficient algebra ``D`` of an iterated algebra and the fixed rings of ``rho``, ``sigma``

    :raises ValueError: If the algebra is not iterated over a finite ring
    """
    from .structure import find_zero_divisor

    D = algebra.ring
    if not isinstance(D, CyclicAlgebraRing) or not D.is_finite:
        raise ValueError("Expected an iterated algebra over a finite ring")
    found = find_zero_divisor(D.inner, budget=budget)
    base = D.base
    spec = algebra.spec
    fix_rho = sum(1 for x in base.elements() if spec.rho(x) == x)
    fix_sigma = sum(1 for x in base.elements() if spec.sigma(x) == x)
    witness = None if found is None else (D.render(found[0].coefficients), D.render(found[1].coefficients))
    return CyclicQuotientReport(cardinality=D.cardinality(), split=found is not None, zero_divisor=witness,
                                fix_rho=fix_rho, fix_sigma=fix_sigma)
