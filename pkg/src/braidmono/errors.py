"""Exception types shared across the package."""


class BraidMonoError(Exception):
    """Base class for all errors raised by this package."""


class MalformedWordError(BraidMonoError):
    """A word contains a zero letter or a letter out of range."""


class DimensionMismatchError(BraidMonoError):
    """Two objects that must agree on strand count or rank do not."""


class DegenerateMotionError(BraidMonoError):
    """A motion has colliding points or an endpoint mismatch."""


class TieError(BraidMonoError):
    """Simultaneous crossings could not be separated into layers."""


class GeometryError(BraidMonoError):
    """A motion builder was given geometrically inconsistent data."""


class ParseError(BraidMonoError):
    """A curve expression could not be parsed."""


class ImproperProjectionError(BraidMonoError):
    """The leading y-coefficient vanishes somewhere on the loop."""


class CriticalFiberError(BraidMonoError):
    """A fiber on the loop has fewer distinct roots than the y-degree."""


class TrackingFailureError(BraidMonoError):
    """Root matching between fibers could not be certified."""


class CapacityError(BraidMonoError):
    """An enumeration exceeds the supported size limits."""


class GroupTableError(BraidMonoError):
    """A multiplication table fails the group axioms."""
