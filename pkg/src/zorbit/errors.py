"""Exception types shared across the library."""

from __future__ import annotations


class ZorbitError(Exception):
    """Base class for every error raised by this package."""


class ParameterDomainError(ZorbitError, ValueError):
    """A base, modulus, or other argument lies outside its admitted domain."""


class DigitDomainError(ZorbitError, ValueError):
    """A digit lies outside [0, base)."""


class PreconditionError(ParameterDomainError):
    """A verifier was invoked on parameters that fail its precondition.

    ``failed`` names the parameter conditions ("a", "b", "c") that did not
    hold.
    """

    def __init__(self, message: str, failed: tuple[str, ...] = ()):
        super().__init__(message)
        self.failed = tuple(failed)


class BudgetExceededError(ZorbitError, RuntimeError):
    """Orbit iteration hit its step budget before finding a repeat.

    Every orbit is eventually periodic, so this signals an undersized
    budget (or a bug), never a genuinely divergent orbit.  ``partial``
    carries the values produced before giving up.
    """

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = tuple(partial)


class AbsorptionError(ZorbitError, RuntimeError):
    """A certified absorbing bound was violated at runtime.

    The bound construction proves forward invariance and strict descent;
    seeing this error means an internal arithmetic fault, not bad input.
    """
