"""Exception types shared across the package."""


class GeoswapError(Exception):
    """Base class for all library-specific errors."""


class DegenerateGeometryError(GeoswapError, ValueError):
    """Raised for geometrically degenerate input (collinear triple, coincident pair)."""


class InfeasibleStartError(GeoswapError, ValueError):
    """Raised when a local search is started from an infeasible solution."""


class GroundSetTooLargeError(GeoswapError, ValueError):
    """Raised when the brute-force oracle is asked to enumerate too large a ground set."""


class EmptyCandidatesError(GeoswapError, ValueError):
    """Raised when class-cover candidate generation leaves some blue point uncoverable."""


class GenerationStallError(GeoswapError, RuntimeError):
    """Raised when rejection sampling in a generator exceeds its stall limit."""


class AmbiguousWalkError(GeoswapError, RuntimeError):
    """Raised when a sampled Voronoi cell walk flickers too often (step too coarse)."""
