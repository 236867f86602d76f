"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`RiordanError`, which the CLI maps to exit status 1.
"""


class RiordanError(ValueError):
    """Base class for domain errors."""


class PrecisionError(RiordanError):
    """Operands disagree on truncation, or more precision was requested than is known."""


class NotAUnitError(RiordanError):
    """A reciprocal or division needs a nonzero constant term."""


class CompositionDomainError(RiordanError):
    """The inner series of a composition has a nonzero constant term."""


class NotInvertibleError(RiordanError):
    """No compositional inverse: the series is not of order exactly one."""


class InvalidStepError(RiordanError):
    """Aeration step or root degree must be a positive integer."""


class SupportError(RiordanError):
    """A series has nonzero coefficients outside the expected residue class."""


class IrrationalRootError(RiordanError):
    """The leading coefficient has no rational root of the requested degree."""


class InvalidArrayError(RiordanError):
    """The generating functions do not define an array of the requested group.

    ``component`` names the offending function, e.g. ``"g"``, ``"f"`` or ``"m2"``.
    """

    def __init__(self, component: str, message: str):
        super().__init__(f"{component}: {message}")
        self.component = component


class ArityError(RiordanError):
    """Arrays with different numbers of multipliers were combined."""


class ParityError(RiordanError):
    """An input vector has the wrong parity for the requested action."""


class MapDomainError(RiordanError):
    """The argument lies outside the domain of a morphism."""


class PositionError(RiordanError):
    """A multiplier position is out of range."""


class EvaluationError(RiordanError):
    """An expression cannot be evaluated as a truncated series."""
