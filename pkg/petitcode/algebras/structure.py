from typing import Any, Callable, Dict, List, Optional, Tuple

from dataclasses import dataclass, field

import numpy as np
import tqdm

from petitcode import logger

from ..errors import BudgetExceeded, InvariantViolation, NotAFiniteField
from ..exact import nullspace_mod_p, rref_mod_p
from ..utils import first_found, partitioned_search
from .petit import DivisionReport, DivisionStatus, PetitAlgebra, PetitElement


@dataclass
class ClaimCheck:
    claim: str
    observed: str
    agrees: bool

    def __str__(self) -> str:
        return "{} -> {} ({})".format(self.claim, self.observed, "agrees" if self.agrees else "DISAGREES")


def check_claim(claim: str, expected: Any, observed: Any, description: Optional[str] = None) -> ClaimCheck:
    """Compare a documented expectation with a computed value (never raises)"""
    check = ClaimCheck(claim, description or str(observed), expected == observed)
    if not check.agrees:
        logger.warning("Claim check failed: {}".format(check))
    return check


class Subspace():
    def __init__(self, p: int, rows: Any, dimension: int) -> None:
        """F_p-subspace of an algebra in reduced row echelon form

        :param p: Prime
        :type p: int
        :param rows: Spanning vectors
        :param dimension: Dimension of the ambient space
        :type dimension: int
        """
        self.p = p
        self.ambient = dimension
        self.rows = rref_mod_p(rows, p, dimension) if len(rows) else np.zeros((0, dimension), dtype=np.int64)

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def cardinality(self) -> int:
        return self.p ** self.dimension

    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(int(c) for c in row) for row in self.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def contains(self, vector: Any) -> bool:
        return len(rref_mod_p(np.vstack([self.rows, np.array(vector, dtype=np.int64)[None, :]]), self.p,
                              self.ambient)) == self.dimension

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.p, np.vstack([self.rows, other.rows]), self.ambient)


def structure_tensor(algebra: PetitAlgebra) -> Optional[Tuple[int, np.ndarray]]:
    """Structure constants ``T[b, c, k]`` of the algebra over the prime field, ``None`` without coordinates

    ``e_b ∘ e_c = sum_k T[b, c, k] e_k`` for the basis ``a t^j`` (coefficient coordinates fastest)
    """
    cached = getattr(algebra, "_structure_tensor", None)
    if cached is not None:
        return cached
    coordinates = algebra.ring.prime_coordinates()
    if coordinates is None:
        return None
    p = coordinates[0]
    n = algebra.prime_dimension()
    basis = [algebra.from_vector([int(i == b) for i in range(n)]) for b in range(n)]
    T = np.zeros((n, n, n), dtype=np.int64)
    for b, x in enumerate(basis):
        for c, y in enumerate(basis):
            T[b, c] = algebra.vector(algebra.mul(x, y))
    algebra._structure_tensor = (p, T)
    return p, T


def associator_tensor(p: int, T: np.ndarray) -> np.ndarray:
    """``A[b, c, d, k]``: coordinates of ``[e_b, e_c, e_d]``"""
    left = np.einsum('bce,edk->bcdk', T, T) % p
    right = np.einsum('cde,bek->bcdk', T, T) % p
    return (left - right) % p


@dataclass
class NucleiReport:
    mode: str
    cardinalities: Dict[str, Optional[int]] = field(default_factory=dict)
    spans: Dict[str, List[PetitElement]] = field(default_factory=dict)
    sample_size: int = 0

    def __str__(self) -> str:
        values = ", ".join("{}: {}".format(name, value if value is not None else "?")
                           for name, value in self.cardinalities.items())
        string = "nuclei ({} mode) {}".format(self.mode, values)
        if self.mode == "sampled":
            string += " [sample of {}]".format(self.sample_size)
        return string


NUCLEI = ("left", "middle", "right", "nucleus", "commuter", "center")


def _linear_nuclei(algebra: PetitAlgebra) -> NucleiReport:
    p, T = structure_tensor(algebra)
    n = T.shape[0]
    A = associator_tensor(p, T)
    equations = {"left": A.transpose(1, 2, 3, 0).reshape(-1, n),
                 "middle": A.transpose(0, 2, 3, 1).reshape(-1, n),
                 "right": A.transpose(0, 1, 3, 2).reshape(-1, n),
                 "commuter": ((T - T.transpose(1, 0, 2)) % p).transpose(1, 2, 0).reshape(-1, n)}
    equations = {name: rref_mod_p(rows, p, n) for name, rows in equations.items()}
    equations["nucleus"] = np.vstack([equations["left"], equations["middle"], equations["right"]])
    equations["center"] = np.vstack([equations["nucleus"], equations["commuter"]])

    report = NucleiReport(mode="linear")
    for name in NUCLEI:
        kernel = nullspace_mod_p(equations[name], n, p)
        report.cardinalities[name] = p ** len(kernel)
        report.spans[name] = [algebra.from_vector(vector) for vector in kernel]
    return report


def _membership(algebra: PetitAlgebra, x: PetitElement, basis: List[PetitElement]) -> Dict[str, bool]:
    left = all(algebra.associator(x, y, z).is_zero() for y in basis for z in basis)
    middle = all(algebra.associator(y, x, z).is_zero() for y in basis for z in basis)
    right = all(algebra.associator(y, z, x).is_zero() for y in basis for z in basis)
    commuter = all(algebra.mul(x, y) == algebra.mul(y, x) for y in basis)
    nucleus = left and middle and right
    return {"left": left, "middle": middle, "right": right, "nucleus": nucleus,
            "commuter": commuter, "center": nucleus and commuter}


def nuclei(algebra: PetitAlgebra,
           budget: int = 1000000,
           rng: Optional[np.random.Generator] = None,
           sample_size: int = 256,
           progress: bool = False) -> NucleiReport:
    """Left, middle and right nucleus, nucleus, commuter and center

    Algebras over rings with prime field coordinates are analysed exactly by linear algebra
    on the associator tensor.  Otherwise every element is tested against the additive basis
    when ``|A| · |basis|^2`` fits the multiplication budget, and a seeded sample is tested
    (``mode = "sampled"``, cardinalities unknown) when it does not

    :param algebra: Petit algebra over a finite ring
    :type algebra: PetitAlgebra
    :param budget: Multiplication budget of the exhaustive scan (default: ``1000000``)
    :type budget: int, optional
    :param rng: Generator of the sampled mode (default: ``None``)
    :type rng: np.random.Generator, optional
    :param sample_size: Number of sampled elements (default: ``256``)
    :type sample_size: int, optional

    :raises NotAFiniteField: If the coefficient ring is infinite

    :return: Nuclei report
    :rtype: NucleiReport
    """
    if not algebra.ring.is_finite:
        raise NotAFiniteField("Nuclei are computed over finite coefficient rings only")
    if algebra.ring.prime_coordinates() is not None:
        return _linear_nuclei(algebra)

    basis = algebra.additive_basis()
    required = algebra.cardinality() * 4 * len(basis) ** 2
    if required <= budget:
        report = NucleiReport(mode="exhaustive")
        found = {name: [] for name in NUCLEI}
        for x in tqdm.tqdm(algebra.elements(), total=algebra.cardinality(), disable=not progress, desc="nuclei"):
            for name, member in _membership(algebra, x, basis).items():
                if member:
                    found[name].append(x)
        report.cardinalities = {name: len(elements) for name, elements in found.items()}
        report.spans = found
        return report

    logger.info("Nuclei of {} need {} multiplications (budget {}): sampled mode".format(algebra.name, required, budget))
    rng = rng if rng is not None else np.random.default_rng(0)
    report = NucleiReport(mode="sampled", sample_size=sample_size)
    found = {name: [] for name in NUCLEI}
    for _ in range(sample_size):
        x = algebra.random_element(rng)
        for name, member in _membership(algebra, x, basis).items():
            if member:
                found[name].append(x)
    report.cardinalities = {name: None for name in NUCLEI}
    report.spans = found
    return report


def scalars_in_nuclei(algebra: PetitAlgebra) -> bool:
    """Whether the coefficient ring lies in the left and middle nucleus (checked on additive bases)"""
    basis = algebra.additive_basis()
    scalars = [algebra.constant(a) for a in algebra.ring.additive_generators()]
    return all(algebra.associator(s, x, y).is_zero() and algebra.associator(x, s, y).is_zero()
               for s in scalars for x in basis for y in basis)


def right_nucleus_by_invariance(algebra: PetitAlgebra) -> Subspace:
    """``{g : f g in R f}`` as the kernel of the prime-field linear map ``g -> f g mod_r f``"""
    p, T = structure_tensor(algebra)
    n = T.shape[0]
    skew_ring = algebra.skew_ring
    columns = []
    for b in range(n):
        g = algebra.from_vector([int(i == b) for i in range(n)])
        remainder = skew_ring.mod_r(skew_ring.skew_mul(algebra.f, g.poly()), algebra.f)
        columns.append(algebra.vector(algebra.element(remainder.coefficients)))
    kernel = nullspace_mod_p(np.array(columns, dtype=np.int64).T, n, p)
    return Subspace(p, kernel, n)


# two-sided ideals

@dataclass
class Ideal:
    cardinality: int
    generators: List[PetitElement]
    key: Any = None

    def __str__(self) -> str:
        return "<{}> ({} elements)".format(", ".join(str(g) for g in self.generators) or "0", self.cardinality)


def _linear_closure(p: int, T: np.ndarray, rows: Any) -> Subspace:
    n = T.shape[0]
    # row vector x: x @ T[b] = b ∘ x, x @ T[:, b] = x ∘ b
    operators = [T[b] for b in range(n)] + [T[:, b, :] for b in range(n)]
    span = Subspace(p, rows, n)
    while True:
        images = [span.rows]
        for M in operators:
            images.append((span.rows @ M) % p)
        grown = Subspace(p, np.vstack(images), n)
        if grown.dimension == span.dimension:
            return span
        span = grown


def _set_closure(algebra: PetitAlgebra, x: PetitElement, basis: List[PetitElement]) -> frozenset:
    ideal = {algebra.zero(), x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        candidates = [algebra.mul(b, y) for b in basis] + [algebra.mul(y, b) for b in basis]
        candidates += [y + z for z in list(ideal)]
        for z in candidates:
            if z not in ideal:
                ideal.add(z)
                frontier.append(z)
    return frozenset(algebra.index(z) for z in ideal)


def two_sided_ideals(algebra: PetitAlgebra,
                     budget: int = 4096,
                     division: Optional[DivisionReport] = None,
                     progress: bool = False) -> List[Ideal]:
    """All two-sided ideals, as sums of the ideals generated by single elements

    Example::

        >>> [ideal.cardinality for ideal in two_sided_ideals(A)]
        [1, 16]

    :param algebra: Petit algebra over a finite ring
    :type algebra: PetitAlgebra
    :param budget: Largest algebra whose elements are enumerated (default: ``4096``)
    :type budget: int, optional
    :param division: Known division status; a proved division algebra has only the trivial ideals (default: ``None``)
    :type division: DivisionReport, optional

    :raises BudgetExceeded: If the algebra is larger than the budget and not known to be division

    :return: Ideals ordered by cardinality
    :rtype: list of Ideal
    """
    N = algebra.cardinality()
    if division is not None and division.status == DivisionStatus.PROVED:
        return [Ideal(1, [], key="zero"), Ideal(N, [algebra.one()], key="whole")]
    if N > budget:
        raise BudgetExceeded("two-sided ideal enumeration", N, budget)

    tensor = structure_tensor(algebra)
    principal = {}
    if tensor is not None:
        p, T = tensor
        for x in tqdm.tqdm(algebra.elements(), total=N, disable=not progress, desc="ideals"):
            span = _linear_closure(p, T, [algebra.vector(x)])
            principal.setdefault(span, x)
    else:
        basis = algebra.additive_basis()
        for x in tqdm.tqdm(algebra.elements(), total=N, disable=not progress, desc="ideals"):
            principal.setdefault(_set_closure(algebra, x, basis), x)

    # close under sums
    ideals = dict((key, [x]) for key, x in principal.items())
    changed = True
    while changed:
        changed = False
        keys = list(ideals)
        for i, a in enumerate(keys):
            for b in keys[i + 1:]:
                total = a.sum(b) if isinstance(a, Subspace) else _sum_sets(algebra, a, b)
                if total not in ideals:
                    ideals[total] = ideals[a] + ideals[b]
                    changed = True
    result = []
    for key, generators in ideals.items():
        size = key.cardinality() if isinstance(key, Subspace) else len(key)
        unique = list(dict.fromkeys(g for g in generators if not g.is_zero()))
        result.append(Ideal(size, unique, key=key))
    return sorted(result, key=lambda ideal: (ideal.cardinality, [algebra.index(g) for g in ideal.generators]))


def _sum_sets(algebra: PetitAlgebra, a: frozenset, b: frozenset) -> frozenset:
    return frozenset(algebra.index(algebra.element_at(x) + algebra.element_at(y)) for x in a for y in b)


# zero divisors

def _ring_zero_divisor(algebra: PetitAlgebra, budget: int) -> Optional[Tuple[Any, Any]]:
    ring = algebra.ring
    coordinates = ring.prime_coordinates()
    if coordinates is not None:
        p, r = coordinates
        generators = [ring.from_coordinates([int(i == b) for i in range(r)]) for b in range(r)]
        T = np.array([[ring.coordinates(ring.mul(a, b)) for b in generators] for a in generators], dtype=np.int64)
        for a in ring.elements():
            if ring.is_zero(a):
                continue
            M = np.einsum('b,bck->kc', np.array(ring.coordinates(a), dtype=np.int64), T) % p
            kernel = nullspace_mod_p(M, r, p)
            if kernel:
                return a, ring.from_coordinates(kernel[0])
        return None
    N = ring.cardinality()
    if N * N > budget:
        raise BudgetExceeded("coefficient zero divisor search", N * N, budget)
    for a in ring.elements():
        for b in ring.elements():
            if not ring.is_zero(a) and not ring.is_zero(b) and ring.is_zero(ring.mul(a, b)):
                return a, b
    return None


def find_zero_divisor(algebra: PetitAlgebra,
                      budget: int = 1000000,
                      threads: int = 1,
                      progress: bool = False) -> Optional[Tuple[PetitElement, PetitElement]]:
    """Nonzero ``(y, x)`` with ``y ∘ x = 0``, or ``None`` when the algebra has no zero divisors

    Over a finite field every nonzero ``x`` is a scalar multiple of a monic ``h`` and the
    scalars lie in the middle nucleus, so only monic ``h`` of degree ``1 .. m-1`` are tested
    for a singular right multiplication.  Over other finite rings a zero divisor of the
    coefficient ring is returned

    :raises NotAFiniteField: If the coefficient ring is infinite
    :raises BudgetExceeded: If there are more candidates than the budget
    :raises InvariantViolation: If a kernel vector is not a zero divisor
    """
    ring = algebra.ring
    if not ring.is_finite:
        raise NotAFiniteField("Zero divisor search needs a finite coefficient ring")
    if not ring.is_field():
        found = _ring_zero_divisor(algebra, budget)
        if found is None:
            return None
        return algebra.constant(found[0]), algebra.constant(found[1])

    tensor = structure_tensor(algebra)
    if tensor is None:
        raise NotAFiniteField("{} has no coordinates over a prime field".format(ring.name))
    p, T = tensor
    n = T.shape[0]
    N = ring.cardinality()
    required = sum(N ** k for k in range(1, algebra.m))
    if required > budget:
        raise BudgetExceeded("zero divisor search", required, budget)

    skew_ring = algebra.skew_ring
    for k in range(1, algebra.m):
        def search(start: int, stop: int) -> Optional[Tuple[int, Tuple[PetitElement, PetitElement]]]:
            candidates = skew_ring.monic_polynomials(k, start, stop)
            for offset, h in enumerate(tqdm.tqdm(candidates, total=stop - start, disable=not progress,
                                                 desc="degree {} zero divisors".format(k))):
                x = algebra.element(h.coefficients)
                M = np.einsum('b,cbk->kc', np.array(algebra.vector(x), dtype=np.int64), T) % p
                kernel = nullspace_mod_p(M, n, p)
                if kernel:
                    return start + offset, (algebra.from_vector(kernel[0]), x)
            return None

        found = first_found(partitioned_search(search, N ** k, threads))
        if found is not None:
            y, x = found[1]
            if not algebra.mul(y, x).is_zero():
                raise InvariantViolation("Kernel vector is not a zero divisor", witness=(str(y), str(x)))
            return y, x
    return None


def orbit_length(sigma: Callable[[Any], Any], a: Any, limit: int = 64) -> int:
    """Smallest ``k >= 1`` with ``sigma^k(a) = a`` (the degree of ``a`` over the fixed ring of ``sigma``)"""
    current = sigma(a)
    for k in range(1, limit + 1):
        if current == a:
            return k
        current = sigma(current)
    raise InvariantViolation("Orbit longer than {}".format(limit), witness=a)


def division_agreement(algebra: PetitAlgebra, budget: int = 1000000, threads: int = 1) -> ClaimCheck:
    """Division (irreducibility of ``f``) agrees with the absence of zero divisors"""
    irreducible = algebra.skew_ring.find_right_factor(algebra.f, budget=budget, threads=threads) is None
    zero_divisor = find_zero_divisor(algebra, budget=budget, threads=threads)
    observed = "irreducible: {}, zero divisor: {}".format(irreducible, zero_divisor is not None)
    return ClaimCheck("f irreducible <=> no zero divisors", observed, irreducible == (zero_divisor is None))
