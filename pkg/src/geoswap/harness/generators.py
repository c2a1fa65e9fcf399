"""Deterministic instance generators. Everything derives from a SplitMix64
stream, so a seed reproduces instances bit for bit."""

from __future__ import annotations

from .. import geom
from ..covering import ClassCoverInstance, CoverInstance, Guard, GuardingInstance
from ..errors import GenerationStallError
from ..geom import Disk, Point2, Square, TerrainChain
from ..packing import ShallowSetInstance, TriangleMatchingInstance
from ..rng import SplitMix64, derive

DEFAULT_STALL = 2000


def _disk(rng: SplitMix64, area: float, radius_range: tuple[float, float], ident: int) -> Disk:
    return Disk(Point2(rng.uniform(0, area), rng.uniform(0, area)),
                rng.uniform(*radius_range), ident)


def gen_disks(n: int, radius_range=(0.5, 1.5), area: float = 10.0,
              seed: int = 0, containment_free: bool = False,
              stall_limit: int = DEFAULT_STALL) -> list[Disk]:
    """n random disks; optionally resampled until no disk contains another."""
    rng = SplitMix64(derive(seed, 0xD15C))
    disks: list[Disk] = []
    rejects = 0
    while len(disks) < n:
        d = _disk(rng, area, radius_range, len(disks))
        ok = True
        if containment_free:
            for e in disks:
                dd = geom.dist(d.center, e.center)
                if dd + d.radius <= e.radius + geom.TOL or dd + e.radius <= d.radius + geom.TOL:
                    ok = False
                    break
        if ok:
            disks.append(d)
            rejects = 0
        else:
            rejects += 1
            if rejects > stall_limit:
                raise GenerationStallError("cannot place containment-free disks")
    return disks


def gen_shallow_disks(n: int, l: int, radius_range=(0.5, 1.5), area: float = 10.0,
                      seed: int = 0, stall_limit: int = DEFAULT_STALL) -> list[Disk]:
    """n disks whose arrangement depth stays <= l, by rejection sampling."""
    if n < 0 or l < 1:
        raise ValueError("need n >= 0 and l >= 1")
    rng = SplitMix64(derive(seed, 0x5A110))
    disks: list[Disk] = []
    rejects = 0
    while len(disks) < n:
        d = _disk(rng, area, radius_range, len(disks))
        if geom.max_depth(disks + [d]) <= l:
            disks.append(d)
            rejects = 0
        else:
            rejects += 1
            if rejects > stall_limit:
                raise GenerationStallError(
                    f"depth bound l={l} unreachable for n={n} in area {area}"
                )
    return disks


def gen_cover_instance(n_disks: int, n_points: int, radius_range=(0.8, 2.0),
                       area: float = 6.0, seed: int = 0, min_point_depth: int = 1,
                       stall_limit: int = DEFAULT_STALL) -> CoverInstance:
    """Covering instance: containment-free random disks, points sampled inside
    the union (or inside depth >= min_point_depth when asked)."""
    disks = gen_disks(n_disks, radius_range, area, seed, containment_free=True,
                      stall_limit=stall_limit)
    rng = SplitMix64(derive(seed, 0xC07E))
    points: list[Point2] = []
    rejects = 0
    while len(points) < n_points:
        p = Point2(rng.uniform(0, area), rng.uniform(0, area))
        if geom.depth_at(p, disks) >= min_point_depth:
            points.append(p)
            rejects = 0
        else:
            rejects += 1
            if rejects > stall_limit:
                raise GenerationStallError("cannot place covered points")
    return CoverInstance(disks, points, preprocess=False)


def gen_class_cover(n_blue: int, n_red: int, area: float = 10.0, seed: int = 0,
                    shape: str = "disk", grid: int | None = None,
                    stall_limit: int = DEFAULT_STALL) -> ClassCoverInstance:
    """Random red/blue instance; with ``grid`` set, coordinates are integers in
    [0, grid) and all points are distinct."""
    rng = SplitMix64(derive(seed, 0xB1CE))
    taken: set[tuple[float, float]] = set()

    def draw() -> Point2:
        rejects = 0
        while True:
            if grid is not None:
                p = Point2(float(rng.randint(0, grid - 1)), float(rng.randint(0, grid - 1)))
            else:
                p = Point2(rng.uniform(0, area), rng.uniform(0, area))
            if (p.x, p.y) not in taken:
                taken.add((p.x, p.y))
                return p
            rejects += 1
            if rejects > stall_limit:
                raise GenerationStallError("cannot place distinct points")

    blue = [draw() for _ in range(n_blue)]
    red = [draw() for _ in range(n_red)]
    return ClassCoverInstance(tuple(blue), tuple(red), shape)


def gen_terrain(n_vertices: int = 8, n_guards: int = 5, n_targets: int = 10,
                seed: int = 0, height: float = 3.0, span_step=(0.5, 1.5),
                range_span=(2.0, 6.0), stall_limit: int = DEFAULT_STALL
                ) -> GuardingInstance:
    """Guarding instance on a random x-monotone chain; targets are resampled
    until each is visible to at least one guard."""
    if n_vertices < 2 or n_guards < 1:
        raise ValueError("need >= 2 vertices and >= 1 guard")
    rng = SplitMix64(derive(seed, 0x7E44))
    x = 0.0
    verts = []
    for _ in range(n_vertices):
        verts.append(Point2(x, rng.uniform(0, height)))
        x += rng.uniform(*span_step)
    terrain = TerrainChain(tuple(verts))

    def on_terrain_point() -> Point2:
        gx = rng.uniform(terrain.x_min, terrain.x_max)
        return Point2(gx, terrain.height_at(gx))

    guards = [Guard(on_terrain_point(), rng.uniform(*range_span))
              for _ in range(n_guards)]
    targets: list[Point2] = []
    rejects = 0
    while len(targets) < n_targets:
        t = on_terrain_point()
        if any(geom.terrain_sees(g.pos, t, g.range, terrain) for g in guards):
            targets.append(t)
            rejects = 0
        else:
            rejects += 1
            if rejects > stall_limit:
                raise GenerationStallError("cannot place visible targets")
    return GuardingInstance(terrain, guards, targets)


def gen_matching_instance(n_points: int, threshold: float = 1.0, area: float = 3.0,
                          seed: int = 0, max_ground: int | None = None,
                          stall_limit: int = 50) -> TriangleMatchingInstance:
    """Random point set; when max_ground is given, whole point sets are redrawn
    (with derived seeds) until the triangle count lands in [1, max_ground]."""
    attempt = 0
    while True:
        rng = SplitMix64(derive(seed, 0x7121, attempt))
        pts = [Point2(rng.uniform(0, area), rng.uniform(0, area))
               for _ in range(n_points)]
        inst = TriangleMatchingInstance.from_points(pts, threshold)
        if max_ground is None or 1 <= inst.ground_size <= max_ground:
            return inst
        attempt += 1
        if attempt > stall_limit:
            raise GenerationStallError(
                f"no instance with 1..{max_ground} triangles after {attempt} attempts"
            )
