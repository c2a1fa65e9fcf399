"""Maximization plugins: maximum l-shallow set and maximum triangle matching
in a unit disk graph.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import geom, kernels
from .engine import MAXIMIZE, Problem, mask_of
from .geom import Disk, Point2, Region

DEGENERATE_TRIANGLE = "degenerate_triangle"  # stat key for skipped collinear triples


class ShallowSetInstance:
    """Ground set of disks or squares with a depth bound l.

    A subset is feasible when the arrangement of the selected objects has depth
    at most l everywhere. Depth of any subset is evaluated exactly on the
    precomputed global candidate points (centers plus pairwise boundary
    crossings): the subset's own candidates are among them, and no plane point
    can exceed the bound they witness.
    """

    def __init__(self, objects: Sequence[Region], l: int):
        if l < 1:
            raise ValueError("depth bound l must be >= 1")
        geom._check_homogeneous(objects)
        self.objects = geom.assign_ids(objects)
        self.l = l
        pts = geom.depth_candidates(self.objects)
        rows = [geom.containment_mask(p, self.objects) for p in pts]
        self._table = kernels.DepthTable(rows, len(self.objects))

    @property
    def ground_size(self) -> int:
        return len(self.objects)

    def depth_of_mask(self, mask: int) -> int:
        return self._table.max_depth(mask)


def shallow_feasible(inst: ShallowSetInstance, selected: Iterable[int]) -> bool:
    return inst.depth_of_mask(mask_of(selected)) <= inst.l


class ShallowSetProblem(Problem):
    direction = MAXIMIZE

    def __init__(self, inst: ShallowSetInstance):
        self.inst = inst
        self.ground_size = inst.ground_size

    def feasible_mask(self, mask: int) -> bool:
        return self.inst.depth_of_mask(mask) <= self.inst.l


@dataclass(frozen=True)
class Triangle:
    a: int
    b: int
    c: int
    rep: Point2

    def __post_init__(self):
        if not self.a < self.b < self.c:
            raise ValueError("triangle vertices must be sorted")

    @property
    def vertices(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _scan_triples(points: Sequence[Point2], threshold: float):
    adj = [set() for _ in points]
    for i, j in geom.unit_disk_edges(points, threshold):
        adj[i].add(j)
        adj[j].add(i)
    triangles: list[Triangle] = []
    skipped = 0
    n = len(points)
    for i in range(n):
        for j in sorted(adj[i]):
            if j <= i:
                continue
            for k in sorted(adj[i] & adj[j]):
                if k <= j:
                    continue
                p, q, r = points[i], points[j], points[k]
                cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
                if abs(cross) < geom.DEGEN_EPS:
                    skipped += 1
                    continue
                rep = Point2((p.x + q.x + r.x) / 3.0, (p.y + q.y + r.y) / 3.0)
                triangles.append(Triangle(i, j, k, rep))
    return triangles, skipped


def enumerate_triangles(points: Sequence[Point2], threshold: float) -> list[Triangle]:
    """All index-sorted triangles of the unit disk graph at the given threshold,
    each carrying its centroid as representative. Collinear triples have no
    interior point and are excluded."""
    return _scan_triples(points, threshold)[0]


class TriangleMatchingInstance:
    """Triangle ground set of a unit disk graph; feasible subsets are
    vertex-disjoint collections."""

    def __init__(self, points: Sequence[Point2], threshold: float,
                 triangles: Sequence[Triangle], degenerate_skipped: int = 0,
                 udg_depth: int | None = None):
        self.points = tuple(points)
        self.threshold = threshold
        self.triangles = tuple(triangles)
        self.degenerate_skipped = degenerate_skipped
        self.udg_depth = udg_depth
        masks = [mask_of(t.vertices) for t in self.triangles]
        self._table = kernels.DisjointTable(masks, len(self.points))

    @classmethod
    def from_points(cls, points: Sequence[Point2], threshold: float = 1.0,
                    l: int | None = None) -> "TriangleMatchingInstance":
        triangles, skipped = _scan_triples(points, threshold)
        disks = [Disk(p, threshold / 2.0, i) for i, p in enumerate(points)]
        depth = geom.max_depth(disks)
        if l is not None and depth > l:
            warnings.warn(
                f"input unit disk graph has arrangement depth {depth} > l={l}; "
                "the solver stays correct but the approximation guarantee weakens",
                stacklevel=2,
            )
        return cls(points, threshold, triangles, skipped, depth)

    @property
    def ground_size(self) -> int:
        return len(self.triangles)

    def disjoint_mask(self, mask: int) -> bool:
        return self._table.disjoint(mask)


def matching_feasible(inst: TriangleMatchingInstance, selected: Iterable[int]) -> bool:
    return inst.disjoint_mask(mask_of(selected))


class TriangleMatchingProblem(Problem):
    direction = MAXIMIZE

    def __init__(self, inst: TriangleMatchingInstance):
        self.inst = inst
        self.ground_size = inst.ground_size

    def feasible_mask(self, mask: int) -> bool:
        return self.inst.disjoint_mask(mask)


def triangle_locality_edges(blue: Sequence[Triangle], red: Sequence[Triangle],
                            threshold: float = 1.0) -> list[tuple[int, int]]:
    """All (blue, red) index pairs whose representatives are within twice the
    UDG threshold; vertex-sharing triangles always qualify since each
    representative is within threshold of every corner."""
    reach = 2.0 * threshold + geom.TOL
    edges = []
    for i, tb in enumerate(blue):
        for j, tr in enumerate(red):
            if geom.dist(tb.rep, tr.rep) <= reach:
                edges.append((i, j))
    return edges
