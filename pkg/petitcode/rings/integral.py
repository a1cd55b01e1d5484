from typing import Any, List

import numpy as np

from ..errors import ZeroInverse
from ..fields import FieldElement, NumberField
from .base import CoefficientRing


class IntegralRing(CoefficientRing):
    def __init__(self, field: NumberField, integral: bool = True) -> None:
        """Ring of integers O_K (or the field K itself) as a coefficient ring

        :param field: Number field
        :type field: NumberField
        :param integral: Whether inverses must be integral (default: ``True``)
        :type integral: bool, optional
        """
        super().__init__(name="O_{}".format(field.name) if integral else field.name)
        self.field = field
        self.integral = integral
        self._zero = field.zero()
        self._one = field.one()

    def zero(self) -> FieldElement:
        return self._zero

    def one(self) -> FieldElement:
        return self._one

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a + b

    def neg(self, a: FieldElement) -> FieldElement:
        return -a

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a - b

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a * b

    def is_zero(self, a: FieldElement) -> bool:
        return a.is_zero()

    def invert(self, a: FieldElement) -> FieldElement:
        inverse = a.inverse()
        if self.integral and not inverse.is_integral():
            raise ZeroInverse("{} is not a unit of {}".format(a, self.name))
        return inverse

    def divide_exact(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return a / b

    def is_field(self) -> bool:
        return not self.integral

    def is_domain(self) -> bool:
        return True

    @property
    def characteristic(self) -> int:
        return 0

    def additive_generators(self) -> List[FieldElement]:
        return self.field.basis()

    def random_element(self, rng: np.random.Generator, box: int = 2) -> FieldElement:
        """Element with integer coordinates drawn uniformly from ``[-box, box]``"""
        return FieldElement(self.field, [int(c) for c in rng.integers(-box, box + 1, size=self.field.degree)])

    def coerce(self, value: Any) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, int):
            return self.field.from_int(value)
        return FieldElement(self.field, value)
