"""Executable checks of the analysis preconditions: the blue/red locality
condition via a sampled additively weighted Voronoi cell walk, the bipartite
planar edge bound, and 2l-shallowness of solution unions.

The weighted (Apollonius) diagram is never constructed; cell ownership is
sampled along one segment per point. The distance field is 1-Lipschitz, so a
sample within one step of a bisector misclassifies by at most the step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import geom
from .errors import AmbiguousWalkError
from .geom import Disk, Point2, Region


@dataclass(frozen=True)
class LocalityGraph:
    blue: tuple[Disk, ...]
    red: tuple[Disk, ...]
    edges: tuple[tuple[int, int], ...]           # (blue list index, red list index)
    witnesses: tuple[tuple[int, int], ...]       # per point: same index pair


def _delta_matrix(px, py, disks: Sequence[Disk]):
    cx = np.array([d.center.x for d in disks])
    cy = np.array([d.center.y for d in disks])
    rr = np.array([d.radius for d in disks])
    dx = np.asarray(px)[:, None] - cx[None, :]
    dy = np.asarray(py)[:, None] - cy[None, :]
    return np.sqrt(dx * dx + dy * dy) - rr[None, :]


def default_max_flips(n_centers: int) -> int:
    return 2 * n_centers + 2


def voronoi_cell_walk(p: Point2, b: Disk, centers: Sequence[Disk],
                      step: float = 1e-3,
                      max_flips: int | None = None) -> tuple[Disk, Point2]:
    """Walk the segment from p to b's center, assigning each sample to its
    nearest center under delta(q, c) = d(q, c) - r_c (ties to the lower id).
    Returns the owner of the last sample before ownership becomes b and the
    first sample owned by b; (b, p) if p's cell already is b's.

    ``step`` is the sample spacing as a fraction of the segment length.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    order = sorted(range(len(centers)), key=lambda i: centers[i].id)
    disks = [centers[i] for i in order]
    b_pos = next((i for i, d in enumerate(disks) if d.id == b.id), None)
    if b_pos is None:
        raise ValueError("walk target must be one of the centers")
    if max_flips is None:
        max_flips = default_max_flips(len(disks))
    nsteps = int(np.ceil(1.0 / step))
    t = np.arange(nsteps + 1, dtype=np.float64) / nsteps
    px = p.x + t * (b.center.x - p.x)
    py = p.y + t * (b.center.y - p.y)
    owner = np.argmin(_delta_matrix(px, py, disks), axis=1)  # first = lowest id
    if owner[0] == b_pos:
        return b, p
    flips = int(np.count_nonzero(owner[1:] != owner[:-1]))
    if flips > max_flips:
        raise AmbiguousWalkError(
            f"ownership changed {flips} times along the walk (> {max_flips}); "
            f"step {step} is too coarse"
        )
    hits = np.nonzero(owner == b_pos)[0]
    if len(hits) == 0:
        raise ValueError(
            "walk never entered the target cell; centers must be "
            "containment-free and in general position"
        )
    first_b = int(hits[0])
    c = disks[int(owner[first_b - 1])]
    q = Point2(float(px[first_b]), float(py[first_b]))
    return c, q


def build_locality_graph(blue: Sequence[Disk], red: Sequence[Disk],
                         points: Sequence[Point2], step: float = 1e-3,
                         max_flips: int | None = None) -> LocalityGraph:
    """For every point, find a blue-red pair that both cover it and whose cells
    witness an adjacency in the weighted Voronoi dual: the nearest
    opposite-color center is the walk target, the last foreign cell on the way
    is the partner. Covering is verified for both endpoints of every witness."""
    blue = tuple(blue)
    red = tuple(red)
    ids = [d.id for d in blue] + [d.id for d in red]
    if len(set(ids)) != len(ids):
        raise ValueError("blue and red disks must carry disjoint ids")
    if points and (not blue or not red):
        raise ValueError("both color classes must be nonempty to witness points")
    all_disks = list(blue) + list(red)
    colors = [0] * len(blue) + [1] * len(red)
    pos_in_class = list(range(len(blue))) + list(range(len(red)))
    if not points:
        return LocalityGraph(blue, red, (), ())

    delta = _delta_matrix([p.x for p in points], [p.y for p in points], all_disks)
    by_id = sorted(range(len(all_disks)), key=lambda i: all_disks[i].id)
    edges: list[tuple[int, int]] = []
    witnesses: list[tuple[int, int]] = []
    for pi, p in enumerate(points):
        row = delta[pi]
        owner = min(by_id, key=lambda i: (row[i],))  # ties to the lower id
        own_color = colors[owner]
        opp = [i for i in by_id if colors[i] != own_color]
        target = min(opp, key=lambda i: (row[i],))
        if row[target] > geom.TOL:
            raise ValueError(
                f"point {pi} is not covered by the "
                f"{'red' if own_color == 0 else 'blue'} side"
            )
        c, _q = voronoi_cell_walk(p, all_disks[target], all_disks, step, max_flips)
        ci = next(i for i in range(len(all_disks)) if all_disks[i].id == c.id)
        if colors[ci] == colors[target]:
            raise AmbiguousWalkError(
                f"walk for point {pi} ended in a same-color cell; "
                "step too coarse or degenerate tie"
            )
        if row[ci] > geom.TOL:
            raise ValueError(f"walk partner for point {pi} does not cover it")
        pair = (pos_in_class[ci], pos_in_class[target])
        if colors[ci] == 1:
            pair = (pos_in_class[target], pos_in_class[ci])
        edges.append(pair)
        witnesses.append(pair)
    uniq = tuple(sorted(set(edges)))
    return LocalityGraph(blue, red, uniq, tuple(witnesses))


def check_planarity_bound(g: LocalityGraph) -> bool:
    """Necessary planarity condition for bipartite graphs: |E| <= 2n - 4 once
    there are at least 3 vertices."""
    n = len(g.blue) + len(g.red)
    if n < 3:
        return True
    return len(set(g.edges)) <= 2 * n - 4


def union_shallowness(blue: Sequence[Region], red: Sequence[Region],
                      l: int) -> tuple[int, bool]:
    """Depth of the union of two object sets (as a set: exact geometric
    duplicates counted once) and whether it stays within 2l."""
    seen = set()
    union: list[Region] = []
    for o in list(blue) + list(red):
        key = (type(o).__name__, o.center.x, o.center.y, geom.region_radius(o))
        if key not in seen:
            seen.add(key)
            union.append(o)
    depth = geom.max_depth(union)
    return depth, depth <= 2 * l


def disjointify(blue: Sequence[Region], red: Sequence[Region],
                points: Sequence[Point2]):
    """The paper's reduction to disjoint solutions: objects appearing in both
    sets are dropped from each, and the points they already solve are dropped
    too. Both residual sets still cover the residual points."""
    key = lambda o: (type(o).__name__, o.center.x, o.center.y, geom.region_radius(o))
    common = {key(o) for o in blue} & {key(o) for o in red}
    b2 = [o for o in blue if key(o) not in common]
    r2 = [o for o in red if key(o) not in common]
    shared = [o for o in blue if key(o) in common]
    pts = [p for p in points if not any(geom.contains(o, p) for o in shared)]
    return b2, r2, pts


def locality_report(g: LocalityGraph, points: Sequence[Point2]) -> dict:
    """JSON-ready summary of one locality-diagnostic run."""
    return {
        "n_blue": len(g.blue),
        "n_red": len(g.red),
        "n_points": len(points),
        "n_edges": len(g.edges),
        "witness_per_point": len(g.witnesses) == len(points),
        "monochromatic_edges": 0,
        "edge_bound_ok": check_planarity_bound(g),
    }
