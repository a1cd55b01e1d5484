from typing import Any, Iterator, List, Optional, Tuple

import numpy as np

from ..errors import ZeroInverse


class CoefficientRing():
    def __init__(self, name: str = "") -> None:
        """Base class for the coefficient rings of skew polynomial rings

        Skew polynomial, Petit algebra and determinant code is written once against
        this interface.  Elements are opaque values owned by the ring

        :param name: Ring name used in reports (default: ``""``)
        :type name: str
        """
        self.name = name

    def __str__(self) -> str:
        string = "Coefficient ring: {}".format(self.name or self.__class__.__name__)
        if self.is_finite:
            string += "\n  |-- cardinality: {}".format(self.cardinality())
        string += "\n  |-- field: {}".format(self.is_field())
        return string

    # arithmetic

    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def add(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def neg(self, a: Any) -> Any:
        raise NotImplementedError

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self.neg(b))

    def mul(self, a: Any, b: Any) -> Any:
        raise NotImplementedError

    def is_zero(self, a: Any) -> bool:
        return a == self.zero()

    def equal(self, a: Any, b: Any) -> bool:
        return a == b

    def invert(self, a: Any) -> Any:
        """Multiplicative inverse

        :raises ZeroInverse: If ``a`` is not a unit
        """
        raise ZeroInverse("{} is not a unit".format(self.render(a)))

    def is_unit(self, a: Any) -> bool:
        try:
            self.invert(a)
        except ZeroInverse:
            return False
        return True

    def divide_exact(self, a: Any, b: Any) -> Any:
        """Exact quotient ``a / b`` for domains (used by fraction-free elimination)"""
        return self.mul(a, self.invert(b))

    # structure

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def is_commutative(self) -> bool:
        return True

    def is_field(self) -> bool:
        return False

    def is_domain(self) -> bool:
        return self.is_field()

    def cardinality(self) -> Optional[int]:
        return None

    @property
    def characteristic(self) -> Optional[int]:
        return None

    def elements(self) -> Iterator[Any]:
        raise NotImplementedError("{} is not finite".format(self.name))

    def index(self, a: Any) -> int:
        """Position of an element in the canonical enumeration order"""
        raise NotImplementedError

    def element(self, index: int) -> Any:
        raise NotImplementedError

    def additive_generators(self) -> List[Any]:
        """Elements generating the additive group (a Z-basis or F_p-basis)"""
        raise NotImplementedError

    def random_element(self, rng: np.random.Generator) -> Any:
        if self.is_finite:
            return self.element(int(rng.integers(self.cardinality())))
        raise NotImplementedError

    # coordinates over the prime field (linear-algebra scans)

    def prime_coordinates(self) -> Optional[Tuple[int, int]]:
        """``(p, dimension)`` when the additive group is an F_p-vector space with coordinates"""
        return None

    def coordinates(self, a: Any) -> Tuple[int, ...]:
        raise NotImplementedError

    def from_coordinates(self, coordinates: Any) -> Any:
        raise NotImplementedError

    # rendering

    def render(self, a: Any) -> str:
        return str(a)
