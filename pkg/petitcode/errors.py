from typing import Any, Optional


class ConfigError(ValueError):
    def __init__(self, message: str, field: Optional[str] = None, witness: Any = None) -> None:
        """Invalid configuration or input data

        :param message: Human readable description
        :type message: str
        :param field: Dotted path of the offending config field (default: ``None``)
        :type field: str, optional
        :param witness: Data exhibiting the failure, e.g. a basis triple (default: ``None``)
        :type witness: Any, optional
        """
        super().__init__(message)
        self.field = field
        self.witness = witness

    def __str__(self) -> str:
        message = super().__str__()
        if self.field:
            return "{}: {}".format(self.field, message)
        return message


class AxiomViolation(ConfigError):
    pass


class BadAutomorphism(ConfigError):
    pass


class SpecMismatch(ConfigError):
    pass


class CoefficientsNotIntegral(ConfigError):
    pass


class NonMonicModulus(ConfigError):
    pass


class EmbeddingMissing(ConfigError):
    pass


class ZeroIdeal(ConfigError):
    pass


class NotWellDefined(ConfigError):
    pass


class NonPrincipalIdeal(ConfigError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, what: str, required: int, budget: int) -> None:
        """Exhaustive scan larger than the configured budget

        :param what: Name of the scan
        :type what: str
        :param required: Number of steps the scan needs
        :type required: int
        :param budget: Configured budget
        :type budget: int
        """
        super().__init__("{} needs {} steps, budget is {}".format(what, required, budget))
        self.required = required
        self.budget = budget


class InvariantViolation(RuntimeError):
    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class ZeroInverse(ZeroDivisionError):
    pass


class NonInvertibleLeadingCoefficient(ArithmeticError):
    pass


class UnsupportedCoefficientRing(TypeError):
    pass


class NotAFiniteField(ValueError):
    pass


class NotAField(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class ZeroElement(ValueError):
    pass


class NotInOuterCode(ValueError):
    pass


class EmptyCode(ValueError):
    pass
