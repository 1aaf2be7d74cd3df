"""Exception types shared across the library.

The CLI maps these onto its exit-code contract, so raising the right
class matters more than the message text.
"""


class SkeinalgError(Exception):
    """Base class for all library errors."""


class ParseError(SkeinalgError):
    """Malformed textual input (word syntax, braid strings, JSON schemas)."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ContractViolation(SkeinalgError):
    """A call broke a documented precondition (dimension or shape mismatch)."""


class ValidationError(SkeinalgError):
    """A constructed object failed its algebraic invariants."""


class TangleShapeError(SkeinalgError):
    """Slice widths do not chain, or a closed tangle was required."""


class LabelNotFound(SkeinalgError):
    """A word referenced a state/costate/observable label the system lacks."""


class InternalCheckError(SkeinalgError):
    """A redundant internal consistency check failed; indicates a bug."""
