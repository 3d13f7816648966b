"""Exception types raised across the package."""


class OpcatError(Exception):
    pass


class ArityMismatch(OpcatError):
    pass


class GenusMismatch(OpcatError):
    pass


class Disconnected(OpcatError):
    pass


class SlotOutOfRange(OpcatError):
    pass


class ColorMismatch(OpcatError):
    pass


class BadPermutation(OpcatError):
    pass


class Mismatch(OpcatError):
    """Two morphisms are not composable."""


class IndexOutOfRange(OpcatError):
    pass


class SizeMismatch(OpcatError):
    pass


class NonIntegerGenus(AssertionError):
    """Euler characteristic bookkeeping produced a non-integer genus.

    Valid compositions never trigger this; seeing it means a bug.
    """


class NotNC(OpcatError):
    pass


class Disconnects(OpcatError):
    pass


class NotFaithful(OpcatError):
    pass


class NotApplicable(OpcatError):
    pass


class InvalidColoring(OpcatError):
    pass


class NoLift(AssertionError):
    pass


class RingUnsupported(OpcatError):
    pass


class BudgetExceeded(OpcatError):
    pass


class ParseError(OpcatError):
    pass


class BoundError(OpcatError):
    """A requested size exceeds what the enumerators support."""
