"""Swap-based local search for geometric covering and packing problems, with
exact brute-force oracles and diagnostics that check the analysis
preconditions (locality condition, union shallowness) empirically.
"""

from .engine import (MAXIMIZE, MINIMIZE, Problem, SearchConfig, Solution,
                     find_improving_swap, local_search, replay_trace,
                     verify_local_optimality)
from .errors import (AmbiguousWalkError, DegenerateGeometryError,
                     EmptyCandidatesError, GenerationStallError, GeoswapError,
                     GroundSetTooLargeError, InfeasibleStartError)
from .geom import (LINF, L2, TOL, Disk, Point2, Square, TerrainChain,
                   circumdisk, contains, depth_at, diameter_disk, dist,
                   max_depth, terrain_sees, unit_disk_edges, weighted_dist)
from .kernels import backend_name
from .oracle import OracleResult, exact_optimum, grid_depth_oracle

__version__ = "0.1.0"

__all__ = [
    "AmbiguousWalkError", "DegenerateGeometryError", "Disk",
    "EmptyCandidatesError", "GenerationStallError", "GeoswapError",
    "GroundSetTooLargeError", "InfeasibleStartError", "LINF", "L2", "MAXIMIZE",
    "MINIMIZE", "OracleResult", "Point2", "Problem", "SearchConfig", "Solution",
    "Square", "TOL", "TerrainChain", "backend_name", "circumdisk", "contains",
    "depth_at", "diameter_disk", "dist", "exact_optimum", "find_improving_swap",
    "grid_depth_oracle", "local_search", "max_depth", "replay_trace",
    "terrain_sees", "unit_disk_edges", "verify_local_optimality",
    "weighted_dist",
]
