"""Exception types shared across the package.

Every error raised by the library derives from :class:`NestfireError`, so
callers can catch one base class. Each subclass also inherits the closest
builtin category (ValueError, LookupError) so generic handlers keep working.
"""


class NestfireError(Exception):
    """Base class for all nestfire errors."""


class InvalidDimension(NestfireError, ValueError):
    """An ensemble dimension (depth or pattern size) is zero or negative."""


class UnknownPattern(NestfireError, LookupError):
    """A pattern index does not exist in the ensemble."""


class SpecMismatch(NestfireError, ValueError):
    """Simulation state dimensions disagree with the ensemble spec."""


class AsymmetricPattern(NestfireError, ValueError):
    """Members of one pattern hold unequal strengths (an implementation bug)."""


class OutOfRange(NestfireError, IndexError):
    """A step, position, or pattern index falls outside the valid range."""


class WrongShape(NestfireError, ValueError):
    """A trace or grid does not have the shape an operation requires."""


class InvalidDepth(NestfireError, ValueError):
    """A counter was asked to run with depth below 1."""


class AttenuatedOut(NestfireError, ValueError):
    """The impulse cannot survive the hop distance with positive strength."""


class DegenerateLayout(NestfireError, ValueError):
    """The two node groups of a layout coincide."""


class ParseError(NestfireError, ValueError):
    """A scenario or trace document is structurally malformed."""


class ValidationError(NestfireError, ValueError):
    """A parsed document violates a domain invariant."""
