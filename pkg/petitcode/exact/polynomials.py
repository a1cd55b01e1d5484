from typing import Iterator, List, Sequence, Tuple

import itertools

from ..errors import BudgetExceeded


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check (small moduli only)"""
    if n <= 1:
        return False
    if n <= 3:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class ModPPoly():
    __slots__ = ("p", "coefficients")

    def __init__(self, coefficients: Sequence[int], p: int) -> None:
        """Dense univariate polynomial over the prime field F_p

        :param coefficients: Coefficients, lowest degree first
        :type coefficients: sequence of int
        :param p: Prime modulus
        :type p: int

        :raises ValueError: If ``p`` is not prime
        """
        if not is_prime(p):
            raise ValueError("Modulus {} is not prime".format(p))
        values = [int(c) % p for c in coefficients]
        while values and not values[-1]:
            values.pop()
        self.p = p
        self.coefficients = tuple(values)

    @property
    def degree(self) -> int:
        """Degree (``-1`` for the zero polynomial)"""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def monic(self) -> "ModPPoly":
        if self.is_zero():
            return self
        inverse = pow(self.leading_coefficient, self.p - 2, self.p)
        return ModPPoly([c * inverse for c in self.coefficients], self.p)

    def _check(self, other: "ModPPoly") -> None:
        if self.p != other.p:
            raise ValueError("Polynomials over different prime fields ({} and {})".format(self.p, other.p))

    def __add__(self, other: "ModPPoly") -> "ModPPoly":
        self._check(other)
        size = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (size - len(self.coefficients))
        b = other.coefficients + (0,) * (size - len(other.coefficients))
        return ModPPoly([x + y for x, y in zip(a, b)], self.p)

    def __neg__(self) -> "ModPPoly":
        return ModPPoly([-c for c in self.coefficients], self.p)

    def __sub__(self, other: "ModPPoly") -> "ModPPoly":
        return self + (-other)

    def __mul__(self, other: "ModPPoly") -> "ModPPoly":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return ModPPoly([], self.p)
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return ModPPoly(product, self.p)

    def __divmod__(self, other: "ModPPoly") -> Tuple["ModPPoly", "ModPPoly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        remainder = list(self.coefficients)
        quotient = [0] * max(len(remainder) - other.degree, 0)
        inverse = pow(other.leading_coefficient, self.p - 2, self.p)
        while len(remainder) - 1 >= other.degree and remainder:
            shift = len(remainder) - 1 - other.degree
            factor = (remainder[-1] * inverse) % self.p
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                remainder[shift + i] = (remainder[shift + i] - factor * c) % self.p
            while remainder and not remainder[-1]:
                remainder.pop()
        return ModPPoly(quotient, self.p), ModPPoly(remainder, self.p)

    def __floordiv__(self, other: "ModPPoly") -> "ModPPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ModPPoly") -> "ModPPoly":
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModPPoly):
            return NotImplemented
        return self.p == other.p and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.p, self.coefficients))

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = (value * x + c) % self.p
        return value

    def __repr__(self) -> str:
        return "ModPPoly({}, p={})".format(list(self.coefficients), self.p)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power, c in enumerate(self.coefficients):
            if not c:
                continue
            if power == 0:
                terms.append(str(c))
            else:
                monomial = "x" if power == 1 else "x^{}".format(power)
                terms.append(monomial if c == 1 else "{}*{}".format(c, monomial))
        return " + ".join(reversed(terms))


def monic_polynomials(degree: int, p: int) -> Iterator[ModPPoly]:
    """Enumerate the monic polynomials of the given degree over F_p in canonical order"""
    for tail in itertools.product(range(p), repeat=degree):
        yield ModPPoly(list(reversed(tail)) + [1], p)


def factor_mod_p(f: ModPPoly, budget: int = 1000000) -> List[Tuple[ModPPoly, int]]:
    """Factor a polynomial over F_p into monic irreducibles by exhaustive trial division

    Divisors are tried by increasing degree, so the first monic divisor found of
    each degree is irreducible (all smaller factors have been removed already)

    Example::

        >>> factor_mod_p(ModPPoly([1, 0, 1], 5))
        [(ModPPoly([2, 1], p=5), 1), (ModPPoly([3, 1], p=5), 1)]

    :param f: Nonzero polynomial
    :type f: ModPPoly
    :param budget: Maximum number of candidate divisors per degree (default: ``1000000``)
    :type budget: int

    :raises ValueError: If ``f`` is the zero polynomial
    :raises BudgetExceeded: If ``p^k`` exceeds the budget for a needed degree ``k``

    :return: Monic irreducible factors with multiplicities, sorted by degree then coefficients
    :rtype: list of tuples (ModPPoly, int)
    """
    if f.is_zero():
        raise ValueError("Cannot factor the zero polynomial")
    remaining = f.monic()
    factors = []
    degree = 1
    while 2 * degree <= remaining.degree:
        if f.p ** degree > budget:
            raise BudgetExceeded("factor_mod_p degree-{} divisors".format(degree), f.p ** degree, budget)
        for candidate in monic_polynomials(degree, f.p):
            multiplicity = 0
            while True:
                quotient, remainder = divmod(remaining, candidate)
                if not remainder.is_zero():
                    break
                remaining, multiplicity = quotient, multiplicity + 1
            if multiplicity:
                factors.append((candidate, multiplicity))
            if 2 * degree > remaining.degree:
                break
        degree += 1
    if remaining.degree >= 1:
        # whatever is left has no divisor of degree <= deg / 2
        factors.append((remaining, 1))
    return sorted(factors, key=lambda item: (item[0].degree, item[0].coefficients))


def is_irreducible_mod_p(f: ModPPoly) -> bool:
    """Whether a polynomial of positive degree is irreducible over F_p"""
    if f.degree < 1:
        return False
    factors = factor_mod_p(f)
    return len(factors) == 1 and factors[0][1] == 1
