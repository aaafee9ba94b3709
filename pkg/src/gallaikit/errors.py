"""Exception hierarchy shared by the library and the CLI."""


class GraphError(Exception):
    """Base class for all gallaikit errors."""


class InputError(GraphError, ValueError):
    """Bad argument: out-of-range vertex, missing edge, invalid generator parameters."""


class Graph6ParseError(InputError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte position where decoding failed (``None`` when
    the problem is not tied to a single byte).
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class FeasibilityError(GraphError, ValueError):
    """Strongly regular parameters whose closed-form spectrum does not exist."""


class ConvergenceError(GraphError, ArithmeticError):
    """Iterative diagonalization hit its sweep cap."""
