from itertools import combinations

import pytest

from geoswap import Disk, Point2, SearchConfig, local_search
from geoswap.engine import mask_of
from geoswap.oracle import exact_optimum
from geoswap.packing import (ShallowSetInstance, ShallowSetProblem, Triangle,
                             TriangleMatchingInstance, TriangleMatchingProblem,
                             enumerate_triangles, matching_feasible,
                             shallow_feasible, triangle_locality_edges)
from geoswap.rng import SplitMix64


def _unit(x, y, i):
    return Disk(Point2(x, y), 1.0, i)


def test_shallow_feasible_empty():
    inst = ShallowSetInstance([_unit(0, 0, 0), _unit(0.5, 0, 1)], 1)
    assert shallow_feasible(inst, [])


def test_shallow_feasible_overlap_violates_l1():
    inst = ShallowSetInstance([_unit(0, 0, 0), _unit(0.5, 0, 1)], 1)
    assert not shallow_feasible(inst, [0, 1])
    assert shallow_feasible(inst, [0])


def test_shallow_three_disks_common_point_violates_l2():
    disks = [_unit(0, 0, 0), _unit(0.5, 0, 1), _unit(0.25, 0.4, 2)]
    inst = ShallowSetInstance(disks, 2)
    assert not shallow_feasible(inst, [0, 1, 2])
    assert shallow_feasible(inst, [0, 1])


def test_shallow_requires_positive_l():
    with pytest.raises(ValueError):
        ShallowSetInstance([_unit(0, 0, 0)], 0)


def test_shallow_feasibility_downward_closed():
    rng = SplitMix64(7)
    for _ in range(20):
        disks = [_unit(rng.uniform(0, 4), rng.uniform(0, 4), i) for i in range(7)]
        inst = ShallowSetInstance(disks, 2)
        sel = [i for i in range(7) if rng.uniform() < 0.5]
        if shallow_feasible(inst, sel):
            for r in range(len(sel) + 1):
                for sub in combinations(sel, r):
                    assert shallow_feasible(inst, sub)


def _brute_mis_value(disks):
    """Independent maximum-independent-set brute force on the disk
    intersection graph (edges where disks overlap, closed)."""
    n = len(disks)
    conflict = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = ((disks[i].center.x - disks[j].center.x) ** 2
                 + (disks[i].center.y - disks[j].center.y) ** 2) ** 0.5
            if d <= disks[i].radius + disks[j].radius + 1e-9:
                conflict[i][j] = conflict[j][i] = True
    best = 0
    for mask in range(1 << n):
        sel = [i for i in range(n) if mask >> i & 1]
        if any(conflict[a][b] for ai, a in enumerate(sel) for b in sel[ai + 1:]):
            continue
        best = max(best, len(sel))
    return best


def test_l1_shallow_equals_max_independent_set():
    rng = SplitMix64(99)
    for _ in range(25):
        n = rng.randint(3, 9)
        disks = [Disk(Point2(rng.uniform(0, 6), rng.uniform(0, 6)),
                      rng.uniform(0.3, 1.2), i) for i in range(n)]
        inst = ShallowSetInstance(disks, 1)
        opt = exact_optimum(ShallowSetProblem(inst), size_cap=12)
        assert opt.value == _brute_mis_value(disks)


def test_two_cliques_of_three():
    # two groups of 3 mutually overlapping disks, groups far apart: optimum 2
    disks = [_unit(0, 0, 0), _unit(0.5, 0, 1), _unit(0.25, 0.4, 2),
             _unit(20, 0, 3), _unit(20.5, 0, 4), _unit(20.25, 0.4, 5)]
    inst = ShallowSetInstance(disks, 1)
    opt = exact_optimum(ShallowSetProblem(inst), size_cap=12)
    assert opt.value == 2


def test_union_of_feasible_sets_is_2l_shallow():
    from geoswap.diagnostics import union_shallowness
    rng = SplitMix64(13)
    for _ in range(15):
        disks = [_unit(rng.uniform(0, 5), rng.uniform(0, 5), i) for i in range(8)]
        inst = ShallowSetInstance(disks, 2)
        p = ShallowSetProblem(inst)
        sol = local_search(p, SearchConfig(k=2))
        opt = exact_optimum(p, size_cap=12)
        depth, ok = union_shallowness([disks[i] for i in sol.selected],
                                      [disks[i] for i in opt.optimum], 2)
        assert ok, f"union depth {depth} exceeds 2l"


def test_enumerate_triangles_single():
    pts = [Point2(0, 0), Point2(0.9, 0), Point2(0.45, 0.7)]
    tris = enumerate_triangles(pts, 1.0)
    assert len(tris) == 1
    assert tris[0].vertices == (0, 1, 2)


def test_enumerate_triangles_k4():
    # side-0.5 square: all pairwise distances <= sqrt(0.5) < 1
    pts = [Point2(0, 0), Point2(0.5, 0), Point2(0, 0.5), Point2(0.5, 0.5)]
    assert len(enumerate_triangles(pts, 1.0)) == 4  # C(4,3)


def test_enumerate_triangles_unit_square_none():
    pts = [Point2(0, 0), Point2(1, 0), Point2(0, 1), Point2(1, 1)]
    assert enumerate_triangles(pts, 1.0) == []  # diagonals sqrt(2) > 1


def test_collinear_triples_excluded():
    pts = [Point2(0, 0), Point2(0.5, 0), Point2(1.0, 0)]
    inst = TriangleMatchingInstance.from_points(pts, 1.0)
    assert inst.ground_size == 0
    assert inst.degenerate_skipped == 1


def test_triangle_rep_is_interior_centroid():
    pts = [Point2(0, 0), Point2(0.9, 0), Point2(0.45, 0.7)]
    t = enumerate_triangles(pts, 1.0)[0]
    assert t.rep.x == pytest.approx((0 + 0.9 + 0.45) / 3)
    assert t.rep.y == pytest.approx(0.7 / 3)


def test_triangle_requires_sorted_vertices():
    with pytest.raises(ValueError):
        Triangle(2, 1, 3, Point2(0, 0))


def test_matching_feasible():
    pts = [Point2(0, 0), Point2(0.9, 0), Point2(0.45, 0.7),
           Point2(5, 0), Point2(5.9, 0), Point2(5.45, 0.7)]
    inst = TriangleMatchingInstance.from_points(pts, 1.0)
    assert inst.ground_size == 2
    assert matching_feasible(inst, [])
    assert matching_feasible(inst, [0, 1])  # vertex-disjoint triangles


def test_matching_shared_vertex_infeasible():
    pts = [Point2(0, 0), Point2(0.9, 0), Point2(0.45, 0.7), Point2(-0.45, 0.7)]
    inst = TriangleMatchingInstance.from_points(pts, 1.0)
    sharing = [(i, j) for i in range(inst.ground_size)
               for j in range(i + 1, inst.ground_size)
               if set(inst.triangles[i].vertices) & set(inst.triangles[j].vertices)]
    assert sharing, "fixture should contain vertex-sharing triangles"
    for i, j in sharing:
        assert not matching_feasible(inst, [i, j])


def test_matching_downward_closed():
    rng = SplitMix64(3)
    pts = [Point2(rng.uniform(0, 2.5), rng.uniform(0, 2.5)) for _ in range(8)]
    inst = TriangleMatchingInstance.from_points(pts, 1.2)
    p = TriangleMatchingProblem(inst)
    for mask in range(1 << min(inst.ground_size, 10)):
        if p.feasible_mask(mask):
            sub = mask
            while sub:
                sub = (sub - 1) & mask
                assert p.feasible_mask(sub)
                if sub == 0:
                    break


def test_locality_edges_identical_triangle():
    t = Triangle(0, 1, 2, Point2(0.5, 0.3))
    assert triangle_locality_edges([t], [t]) == [(0, 0)]


def test_locality_edges_far_reps():
    a = Triangle(0, 1, 2, Point2(0, 0))
    b = Triangle(3, 4, 5, Point2(5, 0))
    assert triangle_locality_edges([a], [b], threshold=1.0) == []


def test_locality_edges_vertex_sharing_always_present():
    rng = SplitMix64(44)
    for _ in range(10):
        pts = [Point2(rng.uniform(0, 3), rng.uniform(0, 3)) for _ in range(9)]
        tris = enumerate_triangles(pts, 1.3)
        edges = set(triangle_locality_edges(tris, tris, threshold=1.3))
        for i, a in enumerate(tris):
            for j, b in enumerate(tris):
                if set(a.vertices) & set(b.vertices):
                    assert (i, j) in edges


def test_udg_depth_warning():
    pts = [Point2(0, 0), Point2(0.1, 0), Point2(0.05, 0.1), Point2(0.02, 0.03)]
    with pytest.warns(UserWarning, match="depth"):
        TriangleMatchingInstance.from_points(pts, 1.0, l=1)


def test_instance_ground_set_matches_enumeration():
    pts = [Point2(0, 0), Point2(0.9, 0), Point2(0.45, 0.7)]
    inst = TriangleMatchingInstance.from_points(pts, 1.0)
    assert list(inst.triangles) == enumerate_triangles(pts, 1.0)
