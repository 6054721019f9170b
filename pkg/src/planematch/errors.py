"""Exception hierarchy for the planematch package."""


class PlanematchError(Exception):
    """Base class for all package errors."""


class CoordinateRangeError(PlanematchError):
    """A coordinate exceeds the exact-arithmetic bound."""


class DuplicatePointError(PlanematchError):
    """Two points of a set coincide."""


class NotGeneralPositionError(PlanematchError):
    """Three points of a set are collinear.

    Carries the offending index triple in ``triple`` when known.
    """

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class DegenerateInputError(PlanematchError):
    """Too few points for the requested structural query."""


class NotOnHullError(PlanematchError):
    """A hull-vertex argument is actually an interior point."""


class OddSizeError(PlanematchError):
    """Matching operations need an even number of points."""


class SizeLimitError(PlanematchError):
    """The point set exceeds the configured enumeration cap."""


class InvalidMatchingError(PlanematchError):
    """A matching violates its invariants against the point set."""


class PreconditionError(PlanematchError):
    """A documented operation precondition does not hold."""


class InternalInconsistencyError(PlanematchError):
    """A constructed object failed its own re-validation.

    Signals an implementation bug, never bad user input.
    """


class ParseError(PlanematchError):
    """A point-set file could not be parsed.

    ``line`` is the 1-based line number of the failure when known.
    """

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class GenerationExhaustedError(PlanematchError):
    """Rejection sampling ran out of attempts."""
