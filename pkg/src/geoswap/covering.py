"""Minimization plugins: discrete point coverage by disks/squares, red/blue
class cover, and terrain guarding with limited sight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import geom, kernels
from .engine import MINIMIZE, Problem, SearchConfig, Solution, local_search, mask_of
from .errors import DegenerateGeometryError, EmptyCandidatesError
from .geom import LINF, L2, Disk, Point2, Region, Square, TerrainChain

DISK = "disk"
SQUARE = "square"


def preprocess_containment(objects: Sequence[Region], tol: float = geom.TOL) -> list[Region]:
    """Drop every object whose closed region lies inside another's; between
    mutually-contained duplicates the earlier one survives. Idempotent."""
    geom._check_homogeneous(objects)
    n = len(objects)

    def inside(i: int, j: int) -> bool:
        a, b = objects[i], objects[j]
        d = geom.dist(a.center, b.center, geom.region_metric(a))
        return d + geom.region_radius(a) <= geom.region_radius(b) + tol

    dropped = [False] * n
    for i in range(n):
        for j in range(n):
            if i == j or dropped[j]:
                continue
            if inside(i, j) and (not inside(j, i) or j < i):
                dropped[i] = True
                break
    return [o for i, o in enumerate(objects) if not dropped[i]]


class CoverInstance:
    """Objects plus points to cover; a subset is feasible when its objects
    jointly contain every point (closed containment)."""

    def __init__(self, objects: Sequence[Region], points: Sequence[Point2],
                 metric: str | None = None, preprocess: bool = True):
        geom._check_homogeneous(objects)
        derived = LINF if (objects and isinstance(objects[0], Square)) else L2
        if metric is None:
            metric = derived
        elif objects and metric != derived:
            raise ValueError(f"metric {metric!r} does not match the object type")
        if preprocess:
            objects = preprocess_containment(objects)
        self.objects = geom.assign_ids(objects)
        self.points = tuple(points)
        self.metric = metric
        rows = []
        for o in self.objects:
            m = 0
            for i, p in enumerate(self.points):
                if geom.contains(o, p):
                    m |= 1 << i
            rows.append(m)
        covered = 0
        for r in rows:
            covered |= r
        full = (1 << len(self.points)) - 1
        if covered != full:
            missing = [i for i in range(len(self.points)) if not (covered >> i) & 1]
            raise ValueError(f"points {missing} are not covered by any object")
        self._table = kernels.CoverTable(rows, len(self.points))

    @property
    def ground_size(self) -> int:
        return len(self.objects)

    def covers_mask(self, mask: int) -> bool:
        return self._table.covers_all(mask)


def cover_feasible(inst: CoverInstance, selected: Iterable[int]) -> bool:
    return inst.covers_mask(mask_of(selected))


class CoverProblem(Problem):
    direction = MINIMIZE

    def __init__(self, inst: CoverInstance):
        self.inst = inst
        self.ground_size = inst.ground_size

    def feasible_mask(self, mask: int) -> bool:
        return self.inst.covers_mask(mask)


@dataclass(frozen=True)
class ClassCoverInstance:
    blue: tuple[Point2, ...]
    red: tuple[Point2, ...]
    shape: str = DISK

    def __post_init__(self):
        if not self.blue:
            raise ValueError("blue point set must be nonempty")
        if self.shape not in (DISK, SQUARE):
            raise ValueError(f"unknown shape {self.shape!r}")
        blue_keys = {(p.x, p.y) for p in self.blue}
        if any((p.x, p.y) in blue_keys for p in self.red):
            raise ValueError("blue and red points must be disjoint")


def _legal(obj: Region, red: Sequence[Point2]) -> bool:
    # closed semantics: a red point exactly on the boundary kills the candidate
    return not any(geom.contains(obj, r) for r in red)


def _dedupe(cands: list[Region]) -> list[Region]:
    seen = set()
    out = []
    for c in cands:
        key = (round(c.center.x, 9), round(c.center.y, 9),
               round(geom.region_radius(c), 9))
        if key not in seen:
            seen.add(key)
            out.append(c)
    return out


def _disk_candidates(inst: ClassCoverInstance) -> list[Disk]:
    pts = list(inst.blue) + list(inst.red)
    cands: list[Disk] = [Disk(b, 0.0) for b in inst.blue]
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            try:
                cands.append(geom.diameter_disk(pts[i], pts[j]))
            except DegenerateGeometryError:
                continue
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                try:
                    cands.append(geom.circumdisk(pts[i], pts[j], pts[k]))
                except DegenerateGeometryError:
                    continue
    return cands


def _square_candidates(inst: ClassCoverInstance) -> list[Square]:
    """Canonical family: sides from pairwise coordinate differences (plus 0),
    left/bottom edges pinned to a point coordinate directly or shifted by the
    side, so any maximal legal square has a pinned stand-in."""
    pts = list(inst.blue) + list(inst.red)
    sides = {0.0}
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            sides.add(abs(pts[i].x - pts[j].x))
            sides.add(abs(pts[i].y - pts[j].y))
    cands: list[Square] = []
    for s in sorted(sides):
        xs = sorted({v for p in pts for v in (p.x, p.x - s)})
        ys = sorted({v for p in pts for v in (p.y, p.y - s)})
        h = s / 2.0
        for x in xs:
            for y in ys:
                cands.append(Square(Point2(x + h, y + h), h))
    return cands


def class_cover_candidates(inst: ClassCoverInstance) -> list[Region]:
    """Legal candidate regions (no red point, closed) that suffice to realize
    an optimal class cover; raises EmptyCandidatesError if some blue point is
    in none of them."""
    raw = _disk_candidates(inst) if inst.shape == DISK else _square_candidates(inst)
    legal = _dedupe([c for c in raw if _legal(c, inst.red)])
    for bi, b in enumerate(inst.blue):
        if not any(geom.contains(c, b) for c in legal):
            raise EmptyCandidatesError(
                f"blue point {bi} at ({b.x}, {b.y}) has no legal candidate"
            )
    return [type(legal[0])(c.center, geom.region_radius(c), i)
            for i, c in enumerate(legal)]


def solve_class_cover(inst: ClassCoverInstance,
                      cfg: Optional[SearchConfig] = None
                      ) -> tuple[Solution, list[Region]]:
    """Local-search class cover: returns the solution over the candidate ground
    set together with the candidates themselves."""
    candidates = class_cover_candidates(inst)
    cover = CoverInstance(candidates, inst.blue)
    solution = local_search(CoverProblem(cover), cfg or SearchConfig(k=2))
    return solution, list(cover.objects)


@dataclass(frozen=True)
class Guard:
    pos: Point2
    range: float

    def __post_init__(self):
        if not self.range > 0:
            raise ValueError("guard range must be positive")


class GuardingInstance:
    """Terrain guarding after visibility precomputation: pure set cover over
    guard->target visibility bitsets."""

    def __init__(self, terrain: TerrainChain, guards: Sequence[Guard],
                 targets: Sequence[Point2]):
        self.terrain = terrain
        self.guards = tuple(guards)
        self.targets = tuple(targets)
        rows = []
        for g in self.guards:
            m = 0
            for i, t in enumerate(self.targets):
                if geom.terrain_sees(g.pos, t, g.range, terrain):
                    m |= 1 << i
            rows.append(m)
        self.coverage = tuple(rows)
        seen = 0
        for r in rows:
            seen |= r
        full = (1 << len(self.targets)) - 1
        if seen != full:
            missing = [i for i in range(len(self.targets)) if not (seen >> i) & 1]
            raise ValueError(f"targets {missing} are visible to no guard")
        self._table = kernels.CoverTable(rows, len(self.targets))

    @property
    def ground_size(self) -> int:
        return len(self.guards)

    def sees_all_mask(self, mask: int) -> bool:
        return self._table.covers_all(mask)

    def range_disks(self) -> list[Disk]:
        return [Disk(g.pos, g.range, i) for i, g in enumerate(self.guards)]


def guarding_feasible(inst: GuardingInstance, selected: Iterable[int]) -> bool:
    return inst.sees_all_mask(mask_of(selected))


class GuardingProblem(Problem):
    direction = MINIMIZE

    def __init__(self, inst: GuardingInstance):
        self.inst = inst
        self.ground_size = inst.ground_size

    def feasible_mask(self, mask: int) -> bool:
        return self.inst.sees_all_mask(mask)


def guarding_depth_check(inst: GuardingInstance) -> int:
    """Arrangement depth of the guards' sight disks (the analysis assumes it
    stays bounded); reported, never enforced."""
    return geom.max_depth(inst.range_disks())
