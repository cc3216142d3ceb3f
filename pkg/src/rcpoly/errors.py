"""Exception hierarchy.

Precondition failures (bad but well-formed input) derive from
:class:`PreconditionError`; the CLI maps them to exit code 3.
"""


class RCPolyError(Exception):
    """Base class for all library errors."""


class PreconditionError(RCPolyError, ValueError):
    """Input violates a mathematical precondition of an operation."""


class NotCoprime(PreconditionError):
    pass


class ZeroSlope(PreconditionError):
    pass


class ZeroResidue(PreconditionError):
    pass


class BothIntegers(PreconditionError):
    pass


class OutOfRange(PreconditionError):
    pass


class ZeroVector(PreconditionError):
    pass


class DegenerateCone(PreconditionError):
    pass


class DegenerateTriangle(PreconditionError):
    pass


class InvalidTriangle(PreconditionError):
    pass


class InvalidPolygon(PreconditionError):
    pass


class ZeroBase(PreconditionError, ZeroDivisionError):
    """A negative exponent was evaluated at a zero argument."""


class PoleOrZeroBase(PreconditionError, ZeroDivisionError):
    """Evaluation point is a pole of a denominator factor, or a zero base."""


class NotPolynomial(PreconditionError):
    """A rational generating function does not reduce to a Laurent polynomial."""


class ParseError(RCPolyError, ValueError):
    """Malformed textual input (rational, vertex list, parameter list)."""
