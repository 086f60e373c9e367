"""Exception hierarchy shared across the package."""


class HairpinError(Exception):
    """Base class for all errors raised by hairpinlang."""


class AlphabetMismatch(HairpinError):
    """A word contains a letter that the alphabet (or automaton) does not know."""


class PrimerSelfComplementary(HairpinError):
    """The primer equals its own complement; decision operations reject it."""


class DomainError(HairpinError):
    """The word is outside the domain required by the operation."""


class CrossingError(HairpinError):
    """The word is crossing with respect to the primer."""


class PreconditionError(HairpinError):
    """A stated precondition of the called operation does not hold."""


class InternalInvariantViolation(HairpinError):
    """A structural fact the implementation relies on failed at runtime."""
