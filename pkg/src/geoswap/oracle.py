"""Exact brute-force ground truth at desk scale."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import geom, kernels
from .engine import MINIMIZE, Problem, mask_of
from .errors import GroundSetTooLargeError
from .geom import Region

DEFAULT_SIZE_CAP = 20


@dataclass(frozen=True)
class OracleResult:
    optimum: tuple[int, ...]
    value: int
    explored: int


def exact_optimum(problem: Problem, size_cap: int = DEFAULT_SIZE_CAP) -> OracleResult:
    """Exhaustive optimum, enumerating subsets cardinality-major and
    lexicographically within each cardinality, so ties always resolve to the
    lexicographically first optimum."""
    n = problem.ground_size
    if n > size_cap:
        raise GroundSetTooLargeError(f"ground size {n} exceeds cap {size_cap}")
    cards = range(0, n + 1) if problem.direction == MINIMIZE else range(n, -1, -1)
    explored = 0
    for c in cards:
        for subset in combinations(range(n), c):
            explored += 1
            if problem.feasible_mask(mask_of(subset)):
                return OracleResult(optimum=subset, value=c, explored=explored)
    raise ValueError("no feasible subset exists (not even the trivial one)")


def grid_depth_oracle(objects: Sequence[Region], resolution: float,
                      tol: float = geom.TOL) -> int:
    """Maximum depth over a regular grid spanning the objects' bounding box
    plus all object centers. ``resolution`` is relative: the grid spacing is
    resolution times the larger bounding-box span. Independent witness for
    geom.max_depth -- it never looks at boundary intersections."""
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if not objects:
        return 0
    geom._check_homogeneous(objects)
    linf = isinstance(objects[0], geom.Square)
    cx = [o.center.x for o in objects]
    cy = [o.center.y for o in objects]
    rr = [geom.region_radius(o) for o in objects]
    x0 = min(c - r for c, r in zip(cx, rr))
    x1 = max(c + r for c, r in zip(cx, rr))
    y0 = min(c - r for c, r in zip(cy, rr))
    y1 = max(c + r for c, r in zip(cy, rr))
    span = max(x1 - x0, y1 - y0)
    best = kernels.point_depth_max(cx, cy, cx, cy, rr, linf=linf, tol=tol)
    if span > 0:
        step = resolution * span
        nx = int(math.floor((x1 - x0) / step)) + 1
        ny = int(math.floor((y1 - y0) / step)) + 1
        best = max(best, kernels.grid_depth(cx, cy, rr, x0, y0, step, nx, ny,
                                            linf=linf, tol=tol))
    return best
