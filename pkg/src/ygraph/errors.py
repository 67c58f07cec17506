"""Exception hierarchy for the ygraph package."""


class YGraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidParams(YGraphError, ValueError):
    pass


class DisconnectedGraph(InvalidParams):
    pass


class LoopEdge(InvalidParams):
    pass


class BadSize(InvalidParams):
    pass


class OutOfStatedRange(InvalidParams):
    """A closed form was requested outside the range where it is known to hold."""


class BadGcd(InvalidParams):
    """gcd(k, l, m) > 1, so P(z) may have roots on the unit circle."""


class NonSquare(YGraphError, ValueError):
    pass


class ZeroPolynomial(YGraphError, ValueError):
    pass


class InexactDivision(YGraphError, ArithmeticError):
    pass


class InternalInconsistency(YGraphError, RuntimeError):
    pass


class NoConvergence(YGraphError, ArithmeticError):
    pass


class UnitCircleRoot(YGraphError, ArithmeticError):
    pass


class TooLarge(YGraphError, ValueError):
    pass


class Cancelled(YGraphError):
    """Raised by a caller-supplied cancellation check to abort a long computation."""
