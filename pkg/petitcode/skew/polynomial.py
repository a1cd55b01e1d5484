from typing import Any, Callable, Iterator, List, Optional, Sequence, Tuple

import functools

import tqdm

from ..errors import (BadAutomorphism, BudgetExceeded, NonInvertibleLeadingCoefficient, NotAFiniteField,
                      UnsupportedCoefficientRing, ZeroInverse)
from ..rings import CoefficientRing
from ..utils import first_found, partitioned_search


@functools.total_ordering
class NegInf():
    """Degree of the zero polynomial, ordered below every integer"""
    def __repr__(self) -> str:
        return "-inf"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NegInf)

    def __lt__(self, other: object) -> bool:
        return not isinstance(other, NegInf)

    def __hash__(self) -> int:
        return hash("-inf")

    def __add__(self, other: Any) -> "NegInf":
        return self

    __radd__ = __add__


NEG_INF = NegInf()


class SkewPoly():
    __slots__ = ("parent", "coefficients")

    def __init__(self, parent: "SkewPolyRing", coefficients: Sequence[Any]) -> None:
        """Skew polynomial ``c_0 + c_1 t + ... + c_n t^n`` (trailing zeros are stripped)"""
        coefficients = list(coefficients)
        ring = parent.ring
        while coefficients and ring.is_zero(coefficients[-1]):
            coefficients.pop()
        self.parent = parent
        self.coefficients = tuple(coefficients)

    @property
    def degree(self) -> Any:
        return len(self.coefficients) - 1 if self.coefficients else NEG_INF

    @property
    def leading_coefficient(self) -> Any:
        return self.coefficients[-1] if self.coefficients else self.parent.ring.zero()

    def coefficient(self, k: int) -> Any:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else self.parent.ring.zero()

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == self.parent.ring.one()

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        ring = self.parent.ring
        size = max(len(self.coefficients), len(other.coefficients))
        return SkewPoly(self.parent, [ring.add(self.coefficient(k), other.coefficient(k)) for k in range(size)])

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.parent, [self.parent.ring.neg(c) for c in self.coefficients])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        return self.parent.skew_mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.parent is other.parent and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return "SkewPoly({})".format(self)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        ring = self.parent.ring
        terms = []
        for k, c in enumerate(self.coefficients):
            if ring.is_zero(c):
                continue
            monomial = "" if not k else ("t" if k == 1 else "t^{}".format(k))
            if k and c == ring.one():
                terms.append(monomial)
                continue
            rendered = ring.render(c)
            if k and (" " in rendered):
                rendered = "({})".format(rendered)
            terms.append(rendered + ("*" + monomial if monomial else ""))
        return " + ".join(terms)


class SkewPolyRing():
    def __init__(self,
                 ring: CoefficientRing,
                 sigma: Callable[[Any], Any],
                 delta: Optional[Callable[[Any], Any]] = None,
                 name: str = "",
                 validate: bool = True,
                 budget: int = 100000) -> None:
        """Skew polynomial ring ``S[t; sigma, delta]`` with ``t a = sigma(a) t + delta(a)``

        Example::

            >>> R = SkewPolyRing(Q, sigma_bar)
            >>> str(R.t() * R.constant(w))
            '[0,1]*t'

        :param ring: Coefficient ring
        :type ring: CoefficientRing
        :param sigma: Injective ring endomorphism of the coefficient ring
        :type sigma: callable
        :param delta: Left sigma-derivation, ``None`` for the zero derivation (default: ``None``)
        :type delta: callable, optional
        :param name: Ring name (default: ``""``)
        :type name: str, optional
        :param validate: Whether to check the laws of ``sigma`` and ``delta`` (default: ``True``)
        :type validate: bool, optional
        :param budget: Largest ring on which injectivity is checked exhaustively (default: ``100000``)
        :type budget: int, optional

        :raises BadAutomorphism: If ``sigma`` or ``delta`` violate their laws (witness pair)
        """
        self.ring = ring
        self.sigma = sigma
        self.delta = delta
        self.name = name or "{}[t;{}{}]".format(ring.name, getattr(sigma, "name", "sigma"),
                                                 "," + getattr(delta, "name", "delta") if delta is not None else "")
        if validate:
            self._validate(budget)

    def __str__(self) -> str:
        string = "Skew polynomial ring: {}".format(self.name)
        string += "\n  |-- coefficient ring: {}".format(self.ring.name)
        string += "\n  |-- sigma: {}".format(getattr(self.sigma, "name", self.sigma))
        string += "\n  |-- delta: {}".format(getattr(self.delta, "name", self.delta) if self.delta is not None else 0)
        return string

    def _validate(self, budget: int) -> None:
        ring, sigma, delta = self.ring, self.sigma, self.delta
        if sigma(ring.one()) != ring.one():
            raise BadAutomorphism("sigma does not fix 1")
        if delta is not None and not ring.is_zero(delta(ring.one())):
            raise BadAutomorphism("delta(1) != 0")
        try:
            generators = ring.additive_generators()
        except NotImplementedError:
            generators = []
        for i, a in enumerate(generators):
            for j, b in enumerate(generators):
                ab = ring.mul(a, b)
                if sigma(ab) != ring.mul(sigma(a), sigma(b)):
                    raise BadAutomorphism("sigma is not multiplicative", witness=(i, j))
                if delta is not None:
                    expected = ring.add(ring.mul(sigma(a), delta(b)), ring.mul(delta(a), b))
                    if delta(ab) != expected:
                        raise BadAutomorphism("delta violates the sigma-derivation law", witness=(i, j))
        if ring.is_finite and ring.cardinality() <= budget:
            images = set(sigma(a) for a in ring.elements())
            if len(images) != ring.cardinality():
                raise BadAutomorphism("sigma is not injective")

    # construction

    def poly(self, coefficients: Sequence[Any]) -> SkewPoly:
        return SkewPoly(self, coefficients)

    def zero(self) -> SkewPoly:
        return SkewPoly(self, [])

    def one(self) -> SkewPoly:
        return SkewPoly(self, [self.ring.one()])

    def constant(self, a: Any) -> SkewPoly:
        return SkewPoly(self, [a])

    def monomial(self, a: Any, k: int) -> SkewPoly:
        return SkewPoly(self, [self.ring.zero()] * k + [a])

    def t(self, k: int = 1) -> SkewPoly:
        return self.monomial(self.ring.one(), k)

    def random_element(self, rng: Any, degree: int) -> SkewPoly:
        return SkewPoly(self, [self.ring.random_element(rng) for _ in range(degree + 1)])

    def sigma_power(self, a: Any, k: int) -> Any:
        for _ in range(k):
            a = self.sigma(a)
        return a

    def twisted_norm(self, a: Any, m: int) -> Any:
        """``sigma^(m-1)(a) ... sigma(a) a``, the remainder of ``t^m`` right divided by ``t - a`` (zero derivation)"""
        result, power = self.ring.one(), a
        factors = []
        for _ in range(m):
            factors.append(power)
            power = self.sigma(power)
        for factor in reversed(factors):
            result = self.ring.mul(result, factor)
        return result

    # arithmetic

    def shift(self, h: SkewPoly) -> SkewPoly:
        """``t · h``, applying ``t a = sigma(a) t + delta(a)`` to every coefficient"""
        ring = self.ring
        coefficients = [ring.zero()] * (len(h.coefficients) + 1)
        for j, c in enumerate(h.coefficients):
            coefficients[j + 1] = ring.add(coefficients[j + 1], self.sigma(c))
            if self.delta is not None:
                coefficients[j] = ring.add(coefficients[j], self.delta(c))
        return SkewPoly(self, coefficients)

    def scale(self, a: Any, h: SkewPoly) -> SkewPoly:
        """Left multiplication by a constant"""
        return SkewPoly(self, [self.ring.mul(a, c) for c in h.coefficients])

    def skew_mul(self, g: SkewPoly, h: SkewPoly) -> SkewPoly:
        """Product ``g h = sum_i g_i (t^i h)``

        :param g: Left factor
        :type g: SkewPoly
        :param h: Right factor
        :type h: SkewPoly

        :return: Product in ``S[t; sigma, delta]``
        :rtype: SkewPoly
        """
        ring = self.ring
        result = [ring.zero()] * (len(g.coefficients) + len(h.coefficients))
        current = h
        for i, a in enumerate(g.coefficients):
            if i:
                current = self.shift(current)
            if ring.is_zero(a):
                continue
            for j, c in enumerate(current.coefficients):
                result[j] = ring.add(result[j], ring.mul(a, c))
        return SkewPoly(self, result)

    def right_divmod(self, g: SkewPoly, f: SkewPoly) -> Tuple[SkewPoly, SkewPoly]:
        """Right division ``g = q f + r`` with ``deg r < deg f``

        :param g: Dividend
        :type g: SkewPoly
        :param f: Divisor with invertible leading coefficient
        :type f: SkewPoly

        :raises NonInvertibleLeadingCoefficient: If the leading coefficient of ``f`` is not a unit

        :return: Quotient and remainder
        :rtype: tuple of SkewPoly
        """
        ring = self.ring
        if f.is_zero():
            raise NonInvertibleLeadingCoefficient("Division by the zero polynomial")
        n = f.degree
        shifted, inverses = [f], []
        remainder, quotient = g, [ring.zero()] * max(len(g.coefficients) - n, 0)
        while not remainder.is_zero() and remainder.degree >= n:
            k = remainder.degree - n
            while len(shifted) <= k:
                shifted.append(self.shift(shifted[-1]))
            while len(inverses) <= k:
                try:
                    inverses.append(ring.invert(self.sigma_power(f.leading_coefficient, len(inverses))))
                except ZeroInverse:
                    raise NonInvertibleLeadingCoefficient("Leading coefficient {} of the divisor is not invertible" \
                        .format(ring.render(f.leading_coefficient)))
            a = ring.mul(remainder.leading_coefficient, inverses[k])
            quotient[k] = ring.add(quotient[k], a)
            remainder = remainder - self.scale(a, shifted[k])
        return SkewPoly(self, quotient), remainder

    def mod_r(self, g: SkewPoly, f: SkewPoly) -> SkewPoly:
        return self.right_divmod(g, f)[1]

    # structure

    def is_invariant(self, f: SkewPoly) -> bool:
        """Whether ``f R ⊂ R f`` (``f`` two-sided), tested on ``f a`` for additive generators ``a`` and on ``f t``

        :raises UnsupportedCoefficientRing: If the coefficient ring exposes no additive generators
        """
        try:
            generators = self.ring.additive_generators()
        except NotImplementedError:
            raise UnsupportedCoefficientRing("Cannot test invariance over {}".format(self.ring.name))
        candidates = [self.constant(a) for a in generators] + [self.t()]
        return all(self.mod_r(self.skew_mul(f, h), f).is_zero() for h in candidates)

    def in_right_nucleus(self, f: SkewPoly, g: SkewPoly) -> bool:
        """Whether ``f g`` lies in ``R f``"""
        return self.mod_r(self.skew_mul(f, g), f).is_zero()

    def monic_polynomials(self, degree: int, start: int = 0, stop: Optional[int] = None) -> Iterator[SkewPoly]:
        """Monic polynomials of a given degree over a finite ring in canonical order (lowest coefficient fastest)"""
        ring = self.ring
        N = ring.cardinality()
        stop = N ** degree if stop is None else stop
        for index in range(start, stop):
            coefficients = []
            for _ in range(degree):
                index, k = divmod(index, N)
                coefficients.append(ring.element(k))
            yield SkewPoly(self, coefficients + [ring.one()])

    def find_right_factor(self,
                          f: SkewPoly,
                          degrees: Optional[Sequence[int]] = None,
                          budget: int = 1000000,
                          threads: int = 1,
                          progress: bool = False) -> Optional[Tuple[SkewPoly, SkewPoly]]:
        """First monic right factor ``h`` (and cofactor ``g`` with ``f = g h``) in canonical order

        :param f: Polynomial over a finite field
        :type f: SkewPoly
        :param degrees: Candidate degrees, ``1 .. deg f - 1`` if omitted (default: ``None``)
        :type degrees: list of int, optional
        :param budget: Largest number of candidates (default: ``1000000``)
        :type budget: int, optional
        :param threads: Worker threads (default: ``1``)
        :type threads: int, optional
        :param progress: Whether to show a progress bar (default: ``False``)
        :type progress: bool, optional

        :raises NotAFiniteField: If the coefficient ring is not a finite field
        :raises BudgetExceeded: If there are more candidates than the budget

        :return: ``(h, g)`` or ``None`` if ``f`` has no right factor of the given degrees
        :rtype: tuple of SkewPoly or None
        """
        ring = self.ring
        if not ring.is_finite or not ring.is_field():
            raise NotAFiniteField("{} is not a finite field".format(ring.name))
        degrees = list(range(1, f.degree)) if degrees is None else list(degrees)
        N = ring.cardinality()
        required = sum(N ** k for k in degrees)
        if required > budget:
            raise BudgetExceeded("right factor search", required, budget)

        for k in degrees:
            def search(start: int, stop: int) -> Optional[Tuple[int, Tuple[SkewPoly, SkewPoly]]]:
                candidates = self.monic_polynomials(k, start, stop)
                for offset, h in enumerate(tqdm.tqdm(candidates, total=stop - start, disable=not progress,
                                                     desc="degree {} factors".format(k))):
                    q, r = self.right_divmod(f, h)
                    if r.is_zero():
                        return start + offset, (h, q)
                return None

            found = first_found(partitioned_search(search, N ** k, threads))
            if found is not None:
                return found[1]
        return None

    def is_irreducible_finite(self, f: SkewPoly, **kwargs) -> bool:
        """Whether ``f`` has no factorization into factors of smaller degree, by exhaustive search

        Example::

            >>> R.is_irreducible_finite(R.t(2) - R.constant(w))
            True

        :raises NotAFiniteField: If the coefficient ring is not a finite field
        :raises BudgetExceeded: If there are more candidates than the budget
        """
        if f.is_zero() or f.degree < 1:
            raise ValueError("Irreducibility needs a polynomial of degree >= 1")
        if not f.is_monic():
            f = self.scale(self.ring.invert(f.leading_coefficient), f)
        return self.find_right_factor(f, **kwargs) is None

    def fixed_elements(self) -> List[Any]:
        """``Fix(sigma)`` of a finite coefficient ring"""
        return [a for a in self.ring.elements() if self.sigma(a) == a]
