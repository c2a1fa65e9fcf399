"""Command line interface.

Subcommands: gen, solve, oracle, verify, bench.
Exit codes: 0 ok, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .. import diagnostics, geom
from ..engine import SearchConfig, Solution, local_search, replay_trace, \
    verify_local_optimality
from ..errors import GeoswapError
from ..oracle import DEFAULT_SIZE_CAP, exact_optimum
from . import bench, generators, io


def _write_json(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=1) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen(args) -> int:
    kind = args.kind
    params = {
        "n": args.n, "l": args.l, "n_disks": args.n, "n_points": args.n_points,
        "n_blue": args.n_blue, "n_red": args.n_red, "threshold": args.threshold,
        "area": args.area, "n_guards": args.n_guards, "n_targets": args.n_targets,
        "n_vertices": args.n_vertices,
        "shape": "square" if args.metric == geom.LINF else "disk",
    }
    inst = bench.generate(kind, {k: v for k, v in params.items() if v is not None},
                          args.seed)
    data = io.instance_to_dict(kind, inst)
    _write_json(data, args.out)
    return 0


def _cmd_solve(args) -> int:
    kind, inst = io.load_instance(args.instance)
    problem, extra = bench.build_problem(kind, inst)
    solution = local_search(problem, SearchConfig(k=args.k))
    _write_json(io.solution_to_dict(kind, args.k, solution,
                                    len(solution.selected), extra), args.out)
    return 0


def _cmd_oracle(args) -> int:
    kind, inst = io.load_instance(args.instance)
    problem, extra = bench.build_problem(kind, inst)
    res = exact_optimum(problem, args.size_cap)
    data = {"kind": kind, "optimum": list(res.optimum), "value": res.value,
            "explored": res.explored}
    if extra is not None:
        data["candidates"] = io.solution_to_dict(kind, 0, Solution(()), 0,
                                                 extra)["candidates"]
    _write_json(data, args.out)
    return 0


def _cmd_verify(args) -> int:
    kind, inst = io.load_instance(args.instance)
    with open(args.solution) as fh:
        sol_data = json.load(fh)
    problem, extra = bench.build_problem(kind, inst)
    selected = tuple(int(i) for i in sol_data["selected"])
    k = int(sol_data.get("k", 1))
    solution = Solution(selected=selected,
                        trace=[(tuple(r), tuple(a)) for r, a in
                               sol_data.get("trace", [])],
                        iterations=int(sol_data.get("iterations", 0)))
    report: dict = {"kind": kind, "k": k, "checks": {}}
    checks = report["checks"]
    checks["feasible"] = problem.is_feasible(selected)
    checks["locally_optimal"] = verify_local_optimality(problem, selected, k)
    try:
        replay_trace(problem, solution)
        checks["trace_ok"] = True
    except (ValueError, GeoswapError) as exc:
        checks["trace_ok"] = False
        report["trace_error"] = str(exc)
    checks["iteration_bound"] = solution.iterations <= problem.ground_size
    if problem.ground_size <= args.size_cap:
        opt = exact_optimum(problem, args.size_cap)
        report["oracle_value"] = opt.value
        report["local_value"] = len(selected)
        if kind == "cover":
            local_objs = [inst.objects[i] for i in selected]
            opt_objs = [inst.objects[i] for i in opt.optimum]
            b, r, pts = diagnostics.disjointify(local_objs, opt_objs, inst.points)
            if pts:
                try:
                    g = diagnostics.build_locality_graph(b, r, pts)
                    report["locality"] = diagnostics.locality_report(g, pts)
                    checks["locality_ok"] = report["locality"]["edge_bound_ok"]
                except (ValueError, GeoswapError) as exc:
                    checks["locality_ok"] = False
                    report["locality_error"] = str(exc)
        if kind == "shallow":
            local_objs = [inst.objects[i] for i in selected]
            opt_objs = [inst.objects[i] for i in opt.optimum]
            depth, ok = diagnostics.union_shallowness(local_objs, opt_objs, inst.l)
            report["union_depth"] = depth
            checks["union_2l"] = ok
    ok = all(checks.values())
    report["pass"] = ok
    _write_json(report, args.out)
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    with open(args.spec) as fh:
        spec = json.load(fh)
    if args.seed is not None:
        spec["seed"] = args.seed
    if args.size_cap is not None:
        spec["size_cap"] = args.size_cap
    if args.out:
        with open(args.out, "w") as fh:
            _records, ok = bench.run_experiment(spec, fh)
    else:
        _records, ok = bench.run_experiment(spec, sys.stdout)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="geoswap",
                                 description="local-search geometric covering "
                                             "and packing toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an instance JSON")
    g.add_argument("--kind", required=True, choices=io.KINDS)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--metric", choices=[geom.L2, geom.LINF], default=geom.L2)
    g.add_argument("--n", type=int, default=None, help="objects / disks")
    g.add_argument("--n-points", type=int, default=None)
    g.add_argument("--n-blue", type=int, default=None)
    g.add_argument("--n-red", type=int, default=None)
    g.add_argument("--n-guards", type=int, default=None)
    g.add_argument("--n-targets", type=int, default=None)
    g.add_argument("--n-vertices", type=int, default=None)
    g.add_argument("--l", type=int, default=None)
    g.add_argument("--threshold", type=float, default=None)
    g.add_argument("--area", type=float, default=None)
    g.add_argument("--out", default=None)
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="run local search on an instance")
    s.add_argument("instance")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--out", default=None)
    s.set_defaults(func=_cmd_solve)

    o = sub.add_parser("oracle", help="exact brute-force optimum")
    o.add_argument("instance")
    o.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    o.add_argument("--out", default=None)
    o.set_defaults(func=_cmd_oracle)

    v = sub.add_parser("verify", help="check a solution and run diagnostics")
    v.add_argument("instance")
    v.add_argument("--solution", required=True)
    v.add_argument("--size-cap", type=int, default=DEFAULT_SIZE_CAP)
    v.add_argument("--out", default=None)
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bench", help="run an experiment spec, emit CSV")
    b.add_argument("spec")
    b.add_argument("--seed", type=int, default=None)
    b.add_argument("--size-cap", type=int, default=None)
    b.add_argument("--out", default=None)
    b.set_defaults(func=_cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, KeyError, ValueError, GeoswapError) as exc:
        print(f"geoswap: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
