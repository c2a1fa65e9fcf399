"""Acceptance suite: every criterion prints one pass/fail line.

Run with  pytest tests/test_acceptance.py -v -s
"""

import io as stdio
import time
from itertools import combinations

from geoswap import (Disk, Point2, SearchConfig, Square, contains,
                     local_search, max_depth, replay_trace,
                     verify_local_optimality)
from geoswap.covering import (ClassCoverInstance, CoverInstance, CoverProblem,
                              class_cover_candidates, solve_class_cover)
from geoswap.diagnostics import (build_locality_graph, check_planarity_bound,
                                 disjointify, union_shallowness)
from geoswap.engine import MAXIMIZE
from geoswap.harness import bench
from geoswap.kernels import backend_name
from geoswap.oracle import exact_optimum, grid_depth_oracle
from geoswap.packing import ShallowSetInstance, ShallowSetProblem
from geoswap.rng import SplitMix64, derive

BASE_SEED = 0x5EED
N_PER_KIND = 100

# run certification stats accumulated across the suite (criteria 2 and 4)
CERT = {"runs": 0, "union_pairs": 0}


def _report(name: str, ok: bool, extra: str = "") -> None:
    tag = "PASS" if ok else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"[{tag}] {name}{suffix}")
    assert ok, name


def _certified_run(problem, k):
    """Solve and certify: local optimality, feasible trace replay, iteration
    bound. Every solver run in the suite goes through here (criterion 2)."""
    sol = local_search(problem, SearchConfig(k=k))
    assert verify_local_optimality(problem, sol.selected, k)
    replay_trace(problem, sol)
    assert sol.iterations <= problem.ground_size
    CERT["runs"] += 1
    return sol


def _gen_instance(kind: str, i: int):
    seed = derive(BASE_SEED, hash(kind) & 0xFFFF, i)
    if kind == "shallow":
        return bench.generate("shallow", {"n": 5 + i % 6, "l": 1 + i % 2,
                                          "area": 5.0}, seed)
    if kind == "matching":
        return bench.generate("matching", {"n_points": 8, "area": 2.4 + 0.2 * (i % 3),
                                           "max_ground": 12}, seed)
    if kind == "cover":
        return bench.generate("cover", {"n_disks": 5 + i % 6,
                                        "n_points": 8 + i % 9}, seed)
    if kind == "guarding":
        return bench.generate("guarding", {"n_guards": 4 + i % 7,
                                           "n_targets": 6 + i % 10,
                                           "n_vertices": 6 + i % 4}, seed)
    if kind == "classcover":
        for attempt in range(50):
            inst = bench.generate(
                "classcover",
                {"n_blue": 2 + i % 2, "n_red": 2 + (i + attempt) % 2, "area": 8.0},
                derive(seed, attempt))
            problem, extra = bench.build_problem("classcover", inst)
            if problem.ground_size <= 12:
                return inst
        raise AssertionError("no small class cover instance found")
    raise ValueError(kind)


def test_criterion_global_optimality_full_budget():
    t0 = time.perf_counter()
    kinds = ("shallow", "matching", "cover", "classcover", "guarding")
    mismatches = []
    for kind in kinds:
        for i in range(N_PER_KIND):
            inst = _gen_instance(kind, i)
            problem, _extra = bench.build_problem(kind, inst)
            n = problem.ground_size
            assert n <= 12, f"{kind} instance {i} has ground size {n}"
            sol = _certified_run(problem, k=max(n, 1))
            opt = exact_optimum(problem, size_cap=12)
            if len(sol.selected) != opt.value:
                mismatches.append((kind, i, len(sol.selected), opt.value))
            if kind == "shallow":
                objs = inst.objects
                depth, ok2l = union_shallowness(
                    [objs[j] for j in sol.selected],
                    [objs[j] for j in opt.optimum], inst.l)
                assert ok2l, f"union depth {depth} > 2l on shallow {i}"
                CERT["union_pairs"] += 1
    elapsed = time.perf_counter() - t0
    ok = not mismatches and (elapsed < 60.0 or backend_name() != "compiled")
    _report("global-optimality-at-full-budget", ok,
            f"{len(kinds) * N_PER_KIND} runs, {elapsed:.1f}s, backend={backend_name()}")


def test_criterion_local_optimality_certificates():
    ok = CERT["runs"] >= 5 * N_PER_KIND
    _report("local-optimality-certificates", ok, f"{CERT['runs']} certified runs")


def test_criterion_shallow_l1_is_max_independent_set():
    bad = []
    for i in range(50):
        rng = SplitMix64(derive(BASE_SEED, 0x15E7, i))
        n = rng.randint(4, 12)
        disks = [Disk(Point2(rng.uniform(0, 6), rng.uniform(0, 6)),
                      rng.uniform(0.3, 1.2), j) for j in range(n)]
        inst = ShallowSetInstance(disks, 1)
        opt = exact_optimum(ShallowSetProblem(inst), size_cap=12)

        # independent route: brute-force MIS over the disk intersection graph
        conflict = [0] * n
        for a in range(n):
            for b in range(a + 1, n):
                dx = disks[a].center.x - disks[b].center.x
                dy = disks[a].center.y - disks[b].center.y
                if (dx * dx + dy * dy) ** 0.5 <= disks[a].radius + disks[b].radius + 1e-9:
                    conflict[a] |= 1 << b
                    conflict[b] |= 1 << a
        best = 0
        for mask in range(1 << n):
            sel = mask
            indep = True
            while sel:
                low = sel & -sel
                if conflict[low.bit_length() - 1] & mask:
                    indep = False
                    break
                sel ^= low
            if indep:
                c = bin(mask).count("1")
                if c > best:
                    best = c
        if opt.value != best:
            bad.append((i, opt.value, best))
    _report("independent-set-specialization-l1", not bad, "50 instances")


def test_criterion_union_2l_shallowness():
    ok = CERT["union_pairs"] >= N_PER_KIND
    _report("union-2l-shallowness", ok,
            f"{CERT['union_pairs']} solution/optimum pairs checked")


def test_criterion_locality_diagnostic():
    built = 0
    vacuous = 0
    for i in range(N_PER_KIND):
        seed = derive(BASE_SEED, 0x10CA, i)
        inst = bench.generate("cover", {"n_disks": 6 + i % 5,
                                        "n_points": 10 + i % 21,
                                        "min_point_depth": 2,
                                        "area": 5.5}, seed)
        problem = CoverProblem(inst)
        opt = exact_optimum(problem, size_cap=12)
        red = [inst.objects[j] for j in opt.optimum]
        rest = [d for j, d in enumerate(inst.objects) if j not in opt.optimum]
        try:
            resid = CoverInstance(rest, inst.points, preprocess=False)
            blue = [resid.objects[j]
                    for j in exact_optimum(CoverProblem(resid), size_cap=12).optimum]
        except ValueError:
            sol = _certified_run(problem, k=1)
            blue = [inst.objects[j] for j in sol.selected]
        b2, r2, pts = disjointify(blue, red, inst.points)
        if not pts or not b2 or not r2:
            vacuous += 1
            continue
        g = build_locality_graph(b2, r2, pts, step=1e-3)  # raises on any miss
        assert len(g.witnesses) == len(pts)
        for p, (bi, ri) in zip(pts, g.witnesses):
            assert contains(g.blue[bi], p) and contains(g.red[ri], p)
        assert check_planarity_bound(g)
        built += 1
    ok = built >= 80 and built + vacuous == N_PER_KIND
    _report("theorem9-locality-diagnostic", ok,
            f"{built} graphs built, {vacuous} vacuous, zero ambiguous walks")


def test_criterion_max_depth_grid_agreement():
    bad = []
    for i in range(N_PER_KIND):
        rng = SplitMix64(derive(BASE_SEED, 0xDE72, i))
        n = rng.randint(1, 15)
        disks = [Disk(Point2(rng.uniform(0, 5), rng.uniform(0, 5)),
                      rng.uniform(0.4, 1.5), j) for j in range(n)]
        a = max_depth(disks)
        b = grid_depth_oracle(disks, 1e-3)
        if a != b:
            bad.append((i, a, b))
    _report("max-depth-grid-oracle-agreement", not bad, f"{N_PER_KIND} instances")


def test_criterion_class_cover_exchange():
    rng = SplitMix64(derive(BASE_SEED, 0xEC4A))
    checked = 0
    solved_instances = 0
    while checked < 200:
        nb, nr = rng.randint(1, 8), rng.randint(1, 8)
        blue = tuple(Point2(rng.uniform(0, 7), rng.uniform(0, 7))
                     for _ in range(nb))
        red = tuple(Point2(rng.uniform(0, 7), rng.uniform(0, 7))
                    for _ in range(nr))
        inst = ClassCoverInstance(blue, red)
        cands = class_cover_candidates(inst)
        cand_cover = [frozenset(i for i, b in enumerate(blue) if contains(c, b))
                      for c in cands]
        if solved_instances < 25:
            sol, objs = solve_class_cover(inst, SearchConfig(k=2))
            chosen = [objs[j] for j in sol.selected]
            assert all(not contains(c, r) for c in chosen for r in red)
            assert all(any(contains(c, b) for c in chosen) for b in blue)
            solved_instances += 1
        # random legal disks against the exchange property
        for _ in range(20):
            if checked >= 200:
                break
            d = Disk(Point2(rng.uniform(0, 7), rng.uniform(0, 7)),
                     rng.uniform(0.2, 3.5))
            if any(contains(d, r) for r in red):
                continue
            covered = frozenset(i for i, b in enumerate(blue) if contains(d, b))
            if not covered:
                continue
            assert any(covered <= cc for cc in cand_cover), \
                f"no candidate dominates a legal disk covering {set(covered)}"
            checked += 1
    _report("class-cover-exchange", True,
            f"200 legal disks, {solved_instances} solved instances red-free")


def _min_cover_value(coverage_sets, n_blue):
    """Exact minimum number of sets whose union is all blue points."""
    full = (1 << n_blue) - 1
    distinct = sorted({m for m in coverage_sets if m}, reverse=True)
    if full == 0:
        return 0
    for c in range(1, n_blue + 1):
        for combo in combinations(distinct, c):
            acc = 0
            for m in combo:
                acc |= m
            if acc == full:
                return c
    return None


def test_criterion_square_class_cover_canonicalization():
    grid = 6
    bad = []
    for i in range(N_PER_KIND):
        rng = SplitMix64(derive(BASE_SEED, 0x59A2, i))
        from geoswap.harness.generators import gen_class_cover
        inst = gen_class_cover(rng.randint(1, 5), rng.randint(1, 5),
                               seed=derive(BASE_SEED, 0x59A2, i, 1),
                               shape="square", grid=grid)
        nb = len(inst.blue)
        cands = class_cover_candidates(inst)
        fam = [sum(1 << j for j, b in enumerate(inst.blue) if contains(c, b))
               for c in cands]
        v_family = _min_cover_value(fam, nb)

        # independent oracle: squares pinned to the full integer grid, not to
        # the input points
        pinned = []
        for s in range(grid):
            coords = sorted({float(g) for g in range(grid)}
                            | {float(g - s) for g in range(grid)})
            for x in coords:
                for y in coords:
                    sq = Square(Point2(x + s / 2.0, y + s / 2.0), s / 2.0)
                    if any(contains(sq, r) for r in inst.red):
                        continue
                    m = sum(1 << j for j, b in enumerate(inst.blue)
                            if contains(sq, b))
                    if m:
                        pinned.append(m)
        v_grid = _min_cover_value(pinned, nb)
        if v_family != v_grid:
            bad.append((i, v_family, v_grid))
    _report("square-class-cover-canonicalization", not bad,
            f"{N_PER_KIND} grid instances")


def test_criterion_bench_reproducibility():
    spec = {
        "seed": 20260810,
        "trials": 3,
        "k": [1, 2],
        "size_cap": 12,
        "problems": [
            {"kind": "cover", "n_disks": 6, "n_points": 9},
            {"kind": "shallow", "n": 6, "l": 2},
            {"kind": "matching", "n_points": 8, "max_ground": 12},
            {"kind": "classcover", "n_blue": 2, "n_red": 2},
            {"kind": "guarding", "n_guards": 4, "n_targets": 8},
        ],
    }
    outs = []
    for _ in range(2):
        buf = stdio.StringIO()
        _records, ok = bench.run_experiment(spec, buf)
        assert ok
        outs.append(buf.getvalue())

    def strip_wall(text):
        rows = []
        for line in text.splitlines():
            if line.startswith("#") or line.startswith("problem,"):
                rows.append(line)
            else:
                cells = line.split(",")
                cells[9] = ""
                rows.append(",".join(cells))
        return rows

    same = strip_wall(outs[0]) == strip_wall(outs[1])
    _report("bench-reproducibility", same,
            f"{len(outs[0].splitlines()) - 2} rows compared modulo wall time")
