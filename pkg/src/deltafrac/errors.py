"""Exception types shared across the library."""


class DeltafracError(Exception):
    """Base class for every library-specific error."""


class DomainError(DeltafracError, ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class GammaPole(DomainError):
    """Gamma was requested at zero or a negative integer."""


class WindowTooShort(DeltafracError, ValueError):
    """A sampled window is too short for the requested operation."""


class SpecialValuePole(DeltafracError, ArithmeticError):
    """A computation ran into an unresolved Gamma pole."""


class DenominatorPochhammerZero(DeltafracError, ZeroDivisionError):
    """A series denominator contains a vanishing Pochhammer factor."""
