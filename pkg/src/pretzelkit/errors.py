"""Exception types shared across the package."""


class PretzelError(Exception):
    """Base class for all errors raised by pretzelkit."""


class NotAKnot(PretzelError, ValueError):
    """The triple (p, q, r) describes a pretzel link with more than one component."""


class MagnitudeError(PretzelError, ValueError):
    """A parameter exceeds the configured magnitude cap."""


class PreconditionViolated(PretzelError, ValueError):
    pass


class Unsupported(PretzelError):
    """No closed-form row covers the input."""


class InvalidFraction(PretzelError, ValueError):
    pass


class ZeroEuler(PreconditionViolated):
    """1/p + 1/q + 1/r = 0, so no Seifert presentation with e < 0 exists."""


class InvalidPresentation(PretzelError, ValueError):
    pass


class NonNegativeEuler(PretzelError, ValueError):
    pass


class InvariantViolation(PretzelError, AssertionError):
    """Two independent computations disagreed; indicates a bug."""
