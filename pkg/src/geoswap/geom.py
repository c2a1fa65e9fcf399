"""Planar geometry primitives: distances, containment, arrangement depth,
circum/diameter disks, terrain visibility, unit-disk-graph edges.

Disks are L2 balls, axis-parallel squares are Linf balls; every predicate uses
closed containment with a fixed tolerance so all modules agree on boundary
cases.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass, replace
from typing import Sequence, Union

from . import kernels
from .errors import DegenerateGeometryError

TOL = 1e-9        # closed-containment slack, shared by every predicate
DEGEN_EPS = 1e-12  # collinearity / coincidence cutoff on the 2x2 determinant

L2 = "L2"
LINF = "Linf"
_METRICS = (L2, LINF)


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")


@dataclass(frozen=True)
class Disk:
    center: Point2
    radius: float
    id: int = -1

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError(f"invalid radius {self.radius}")


@dataclass(frozen=True)
class Square:
    center: Point2
    half_side: float
    id: int = -1

    def __post_init__(self):
        if not (math.isfinite(self.half_side) and self.half_side >= 0.0):
            raise ValueError(f"invalid half side {self.half_side}")


Region = Union[Disk, Square]


def region_radius(obj: Region) -> float:
    return obj.half_side if isinstance(obj, Square) else obj.radius


def region_metric(obj: Region) -> str:
    return LINF if isinstance(obj, Square) else L2


def assign_ids(objects: Sequence[Region]) -> tuple[Region, ...]:
    """Return objects with positional ids unless they already carry unique ones."""
    ids = [o.id for o in objects]
    if all(i >= 0 for i in ids) and len(set(ids)) == len(ids):
        return tuple(objects)
    return tuple(replace(o, id=i) for i, o in enumerate(objects))


def _check_homogeneous(objects: Sequence[Region]) -> None:
    kinds = {type(o) for o in objects}
    if len(kinds) > 1:
        raise ValueError("mixed disk/square object list")


def dist(p: Point2, q: Point2, metric: str = L2) -> float:
    if metric == L2:
        dx = p.x - q.x
        dy = p.y - q.y
        # sqrt(dx*dx + dy*dy) rather than hypot: the compiled and vectorized
        # kernels must reproduce the scalar result bit for bit
        return math.sqrt(dx * dx + dy * dy)
    if metric == LINF:
        return max(abs(p.x - q.x), abs(p.y - q.y))
    raise ValueError(f"unknown metric {metric!r}")


def weighted_dist(p: Point2, obj: Region, metric: str | None = None) -> float:
    """Distance from p to the object's center minus its radius.

    Nonpositive exactly when p lies in the closed region. The metric defaults
    to the object's own (L2 for disks, Linf for squares).
    """
    if metric is None:
        metric = region_metric(obj)
    return dist(p, obj.center, metric) - region_radius(obj)


def contains(obj: Region, p: Point2, tol: float = TOL) -> bool:
    return weighted_dist(p, obj) <= tol


def depth_at(p: Point2, objects: Sequence[Region], tol: float = TOL) -> int:
    _check_homogeneous(objects)
    return sum(1 for o in objects if contains(o, p, tol))


def _circle_pair_points(a: Disk, b: Disk) -> list[Point2]:
    """Intersection points of two circle boundaries (0, 1 or 2 points)."""
    dx = b.center.x - a.center.x
    dy = b.center.y - a.center.y
    d2 = dx * dx + dy * dy
    if d2 < DEGEN_EPS:  # concentric: no isolated boundary intersections
        return []
    d = math.sqrt(d2)
    ar, br = a.radius, b.radius
    t = (d2 + ar * ar - br * br) / (2.0 * d)
    h2 = ar * ar - t * t
    if h2 < 0.0:
        if h2 > -1e-12 * max(1.0, ar * ar):  # tangent within rounding
            h2 = 0.0
        else:
            return []
    h = math.sqrt(h2)
    ux, uy = dx / d, dy / d
    mx = a.center.x + t * ux
    my = a.center.y + t * uy
    if h == 0.0:
        return [Point2(mx, my)]
    return [Point2(mx - h * uy, my + h * ux), Point2(mx + h * uy, my - h * ux)]


def depth_candidates(objects: Sequence[Region]) -> list[Point2]:
    """Candidate points whose depths witness the maximum arrangement depth.

    Disks: all centers plus all pairwise boundary intersections (a deepest face
    with a vertex has such a point on its closure; a vertex-free deepest face
    is a whole disk whose center attains it). Squares: centers plus the grid of
    all edge x-coordinates crossed with all edge y-coordinates, a superset of
    every pairwise boundary-overlap corner.
    """
    _check_homogeneous(objects)
    if not objects:
        return []
    pts: list[Point2] = [o.center for o in objects]
    if isinstance(objects[0], Square):
        xs: set[float] = set()
        ys: set[float] = set()
        for o in objects:
            xs.update((o.center.x - o.half_side, o.center.x + o.half_side))
            ys.update((o.center.y - o.half_side, o.center.y + o.half_side))
        pts.extend(Point2(x, y) for x in sorted(xs) for y in sorted(ys))
        return pts
    n = len(objects)
    for i in range(n):
        for j in range(i + 1, n):
            pts.extend(_circle_pair_points(objects[i], objects[j]))
    return pts


def max_depth(objects: Sequence[Region], tol: float = TOL) -> int:
    """Maximum over the plane of depth_at, computed on the candidate set."""
    if not objects:
        return 0
    pts = depth_candidates(objects)
    return kernels.point_depth_max(
        [p.x for p in pts],
        [p.y for p in pts],
        [o.center.x for o in objects],
        [o.center.y for o in objects],
        [region_radius(o) for o in objects],
        linf=isinstance(objects[0], Square),
        tol=tol,
    )


def circumdisk(p1: Point2, p2: Point2, p3: Point2, id: int = -1) -> Disk:
    """Disk through all three points; DegenerateGeometryError on collinear input."""
    ax, ay = p2.x - p1.x, p2.y - p1.y
    bx, by = p3.x - p1.x, p3.y - p1.y
    det = ax * by - ay * bx
    if abs(det) < DEGEN_EPS:
        raise DegenerateGeometryError("collinear or coincident triple")
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    cx = p1.x + (by * a2 - ay * b2) / (2.0 * det)
    cy = p1.y + (ax * b2 - bx * a2) / (2.0 * det)
    center = Point2(cx, cy)
    return Disk(center, dist(center, p1), id)


def diameter_disk(p1: Point2, p2: Point2, id: int = -1) -> Disk:
    if dist(p1, p2) < DEGEN_EPS:
        raise DegenerateGeometryError("coincident pair")
    center = Point2((p1.x + p2.x) / 2.0, (p1.y + p2.y) / 2.0)
    return Disk(center, dist(p1, p2) / 2.0, id)


@dataclass(frozen=True)
class TerrainChain:
    """x-monotone polygonal chain (strictly increasing x-coordinates)."""

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("terrain needs at least 2 vertices")
        xs = [v.x for v in self.vertices]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValueError("terrain x-coordinates must be strictly increasing")

    @property
    def x_min(self) -> float:
        return self.vertices[0].x

    @property
    def x_max(self) -> float:
        return self.vertices[-1].x

    def height_at(self, x: float) -> float:
        if not (self.x_min <= x <= self.x_max):
            raise ValueError(f"x={x} outside terrain extent")
        xs = [v.x for v in self.vertices]
        i = min(bisect_right(xs, x), len(xs) - 1)
        a, b = self.vertices[i - 1], self.vertices[i]
        t = (x - a.x) / (b.x - a.x)
        return a.y + t * (b.y - a.y)

    def on_terrain(self, p: Point2, tol: float = TOL) -> bool:
        if not (self.x_min - tol <= p.x <= self.x_max + tol):
            return False
        x = min(max(p.x, self.x_min), self.x_max)
        return abs(self.height_at(x) - p.y) <= tol


def terrain_sees(g: Point2, x: Point2, r_g: float, terrain: TerrainChain,
                 tol: float = TOL) -> bool:
    """True iff the sight segment gx stays on or above the terrain and |gx| <= r_g.

    On an x-monotone chain the segment crosses an edge exactly when some
    terrain vertex strictly between the endpoints lies strictly above it.
    """
    for label, p in (("g", g), ("x", x)):
        if not terrain.on_terrain(p, tol):
            raise ValueError(f"point {label}=({p.x}, {p.y}) is not on the terrain")
    if dist(g, x) > r_g + tol:
        return False
    a, b = (g, x) if g.x <= x.x else (x, g)
    if b.x - a.x <= 0.0:  # same x on a strictly monotone chain: same point
        return True
    for v in terrain.vertices:
        if v.x <= a.x:
            continue
        if v.x >= b.x:
            break
        above = (b.x - a.x) * (v.y - a.y) - (b.y - a.y) * (v.x - a.x)
        if above > tol:
            return False
    return True


def unit_disk_edges(points: Sequence[Point2], threshold: float,
                    tol: float = TOL) -> list[tuple[int, int]]:
    """All unordered index pairs at L2 distance <= threshold (closed)."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    edges = []
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if dist(points[i], points[j]) <= threshold + tol:
                edges.append((i, j))
    return edges


def containment_mask(p: Point2, objects: Sequence[Region], tol: float = TOL) -> int:
    """Bitmask with bit j set iff objects[j] contains p (closed)."""
    m = 0
    for j, o in enumerate(objects):
        if contains(o, p, tol):
            m |= 1 << j
    return m
