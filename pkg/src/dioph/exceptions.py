"""Exception types shared across the library.

The command line maps these onto exit codes: DomainError and parse
failures are user errors (2), PrecisionError and InfeasibleError are
legitimate mathematical outcomes (3), InternalError means a certified
invariant failed and indicates a bug (4).
"""


class DomainError(ValueError):
    """Input lies outside an operation's mathematical domain."""


class ParseError(DomainError):
    """Malformed textual input. Carries the offset of the first bad token."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnsupportedError(DomainError):
    """Legal mathematics, but beyond the implemented scale or generality."""


class PrecisionError(RuntimeError):
    """An enclosure could not be certified within the iteration budget."""


class InfeasibleError(RuntimeError):
    """A construction has no solution for these parameters.

    Carries the dimension counts of the linear system that failed.
    """

    def __init__(self, message, constraints=None, unknowns=None):
        super().__init__(message)
        self.constraints = constraints
        self.unknowns = unknowns


class InternalError(RuntimeError):
    """A theorem-guaranteed invariant failed; this is a bug, not bad input."""
