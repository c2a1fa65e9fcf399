"""Experiment runner: generates seeded instances, solves them at each swap
budget, compares against the exact oracle where tractable, runs the per-kind
diagnostics and emits one CSV row per (instance, k).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Optional, TextIO

from .. import diagnostics, geom
from ..covering import (CoverInstance, CoverProblem, GuardingProblem,
                        class_cover_candidates, guarding_depth_check)
from ..engine import (MAXIMIZE, Problem, SearchConfig, Solution, local_search,
                      replay_trace, verify_local_optimality)
from ..errors import GeoswapError
from ..geom import Disk
from ..oracle import exact_optimum
from ..packing import (ShallowSetInstance, ShallowSetProblem,
                       TriangleMatchingProblem, triangle_locality_edges)
from ..rng import derive
from . import generators

CSV_SCHEMA_LINE = "# schema=1"
CSV_COLUMNS = ("problem", "instance", "n", "k", "local_value", "oracle_value",
               "ratio", "iterations", "depth", "wall_ms", "status", "flags")
RATIO_SLACK = 1e-9


@dataclass
class ExperimentRecord:
    problem: str
    instance: str
    n: int
    k: int
    local_value: Optional[int] = None
    oracle_value: Optional[int] = None
    ratio: Optional[float] = None
    iterations: Optional[int] = None
    depth: Optional[int] = None
    wall_ms: Optional[float] = None
    status: str = "ok"
    flags: str = "ok"

    def row(self) -> list[str]:
        def fmt(v):
            return "" if v is None else (repr(v) if isinstance(v, float) else str(v))
        return [self.problem, self.instance, str(self.n), str(self.k),
                fmt(self.local_value), fmt(self.oracle_value), fmt(self.ratio),
                fmt(self.iterations), fmt(self.depth), fmt(self.wall_ms),
                self.status, self.flags]


def build_problem(kind: str, inst: Any) -> tuple[Problem, Any]:
    """Engine-facing problem for an instance; the extra slot carries the
    class-cover candidate list (its ground set)."""
    if kind == "shallow":
        return ShallowSetProblem(inst), None
    if kind == "matching":
        return TriangleMatchingProblem(inst), None
    if kind == "cover":
        return CoverProblem(inst), None
    if kind == "classcover":
        candidates = class_cover_candidates(inst)
        cover = CoverInstance(candidates, inst.blue)
        return CoverProblem(cover), list(cover.objects)
    if kind == "guarding":
        return GuardingProblem(inst), None
    raise ValueError(f"unknown kind {kind!r}")


def generate(kind: str, params: dict, seed: int) -> Any:
    if kind == "shallow":
        disks = generators.gen_disks(
            n=params.get("n", 8),
            radius_range=tuple(params.get("radius_range", (0.5, 1.5))),
            area=params.get("area", 6.0),
            seed=seed)
        return ShallowSetInstance(disks, params.get("l", 2))
    if kind == "matching":
        return generators.gen_matching_instance(
            n_points=params.get("n_points", 9),
            threshold=params.get("threshold", 1.0),
            area=params.get("area", 3.0),
            seed=seed,
            max_ground=params.get("max_ground"))
    if kind == "cover":
        return generators.gen_cover_instance(
            n_disks=params.get("n_disks", 8),
            n_points=params.get("n_points", 15),
            area=params.get("area", 6.0),
            seed=seed,
            min_point_depth=params.get("min_point_depth", 1))
    if kind == "classcover":
        return generators.gen_class_cover(
            n_blue=params.get("n_blue", 3),
            n_red=params.get("n_red", 3),
            area=params.get("area", 10.0),
            seed=seed,
            shape=params.get("shape", "disk"),
            grid=params.get("grid"))
    if kind == "guarding":
        return generators.gen_terrain(
            n_vertices=params.get("n_vertices", 8),
            n_guards=params.get("n_guards", 5),
            n_targets=params.get("n_targets", 10),
            seed=seed)
    raise ValueError(f"unknown kind {kind!r}")


def _ratio(direction: str, local: int, opt: int) -> float:
    num, den = (local, opt) if direction != MAXIMIZE else (opt, local)
    if den == 0:
        return 1.0 if num == 0 else float("inf")
    return num / den


def _diagnose(kind: str, inst: Any, problem: Problem, extra: Any,
              solution: Solution, opt) -> tuple[list[str], Optional[int]]:
    """Per-kind diagnostic flags (empty = all good) and a recorded depth."""
    bad: list[str] = []
    depth: Optional[int] = None
    sel = solution.selected
    if kind == "shallow":
        local_objs = [inst.objects[i] for i in sel]
        if opt is not None:
            opt_objs = [inst.objects[i] for i in opt.optimum]
            depth, ok = diagnostics.union_shallowness(local_objs, opt_objs, inst.l)
            if not ok:
                bad.append("union_2l")
        else:
            depth = geom.max_depth(local_objs)
    elif kind == "matching":
        local_tris = [inst.triangles[i] for i in sel]
        if opt is not None:
            opt_tris = [inst.triangles[i] for i in opt.optimum]
            edges = set(triangle_locality_edges(local_tris, opt_tris, inst.threshold))
            for i, tb in enumerate(local_tris):
                for j, tr in enumerate(opt_tris):
                    if set(tb.vertices) & set(tr.vertices) and (i, j) not in edges:
                        bad.append("locality_soundness")
            reps = [t.rep for t in local_tris] + [t.rep for t in opt_tris]
            depth = geom.max_depth(
                [Disk(p, inst.threshold, i) for i, p in enumerate(reps)])
    elif kind == "cover":
        depth = geom.max_depth(inst.objects)
        if opt is not None:
            local_objs = [inst.objects[i] for i in sel]
            opt_objs = [inst.objects[i] for i in opt.optimum]
            b, r, pts = diagnostics.disjointify(local_objs, opt_objs, inst.points)
            if pts:
                try:
                    g = diagnostics.build_locality_graph(b, r, pts)
                    if not diagnostics.check_planarity_bound(g):
                        bad.append("edge_bound")
                except GeoswapError:
                    bad.append("walk_ambiguous")
                except ValueError:
                    bad.append("locality_witness")
    elif kind == "classcover":
        chosen = [extra[i] for i in sel]
        if any(geom.contains(c, r) for c in chosen for r in inst.red):
            bad.append("red_covered")
        depth = geom.max_depth(chosen) if chosen else 0
    elif kind == "guarding":
        depth = guarding_depth_check(inst)
        for t in inst.targets:
            if not any(geom.terrain_sees(inst.guards[i].pos, t,
                                         inst.guards[i].range, inst.terrain)
                       for i in sel):
                bad.append("unseen_target")
                break
    return bad, depth


def run_one(kind: str, inst: Any, k: int, size_cap: int,
            instance_id: str) -> ExperimentRecord:
    problem, extra = build_problem(kind, inst)
    rec = ExperimentRecord(problem=kind, instance=instance_id,
                           n=problem.ground_size, k=k)
    try:
        t0 = time.perf_counter()
        solution = local_search(problem, SearchConfig(k=k))
        rec.wall_ms = round((time.perf_counter() - t0) * 1000.0, 3)
        rec.local_value = len(solution.selected)
        rec.iterations = solution.iterations

        bad: list[str] = []
        if not verify_local_optimality(problem, solution.selected, k):
            bad.append("local_opt")
        replay_trace(problem, solution)
        if solution.iterations > problem.ground_size:
            bad.append("iteration_bound")

        opt = None
        if problem.ground_size <= size_cap:
            opt = exact_optimum(problem, size_cap)
            rec.oracle_value = opt.value
            rec.ratio = _ratio(problem.direction, rec.local_value, opt.value)
            if rec.ratio < 1.0 - RATIO_SLACK:
                bad.append("ratio")
        kind_bad, depth = _diagnose(kind, inst, problem, extra, solution, opt)
        bad.extend(kind_bad)
        rec.depth = depth
        rec.flags = "ok" if not bad else ";".join(sorted(set(bad)))
    except GeoswapError as exc:
        rec.status = type(exc).__name__
        rec.flags = "error"
    return rec


def run_experiment(spec: dict, out: TextIO) -> tuple[list[ExperimentRecord], bool]:
    """Runs the spec and writes CSV rows in deterministic (problem, trial, k)
    order. Returns the records and whether every row passed its diagnostics."""
    seed = int(spec.get("seed", 0))
    trials = int(spec.get("trials", 1))
    ks = [int(k) for k in spec.get("k", [1])]
    size_cap = int(spec.get("size_cap", 20))
    problems = spec.get("problems", [])

    out.write(CSV_SCHEMA_LINE + "\n")
    out.write(",".join(CSV_COLUMNS) + "\n")
    records: list[ExperimentRecord] = []
    all_ok = True
    for pi, pspec in enumerate(problems):
        kind = pspec["kind"]
        for trial in range(trials):
            inst = generate(kind, pspec, derive(seed, pi, trial))
            for k in ks:
                rec = run_one(kind, inst, k, size_cap, f"{kind}-{trial}")
                records.append(rec)
                out.write(",".join(rec.row()) + "\n")
                if rec.status != "ok" or rec.flags != "ok":
                    all_ok = False
    return records, all_ok
