"""Instance and solution (de)serialization.

Instance schema (JSON object):
    kind      one of shallow | matching | cover | classcover | guarding
    metric    "L2" (disks) or "Linf" (axis-parallel squares)
    objects   [{"cx","cy","r","id"?}]     r is the radius / half side
    points    [[x, y]]                    cover points, blue points, targets
    red       [[x, y]]                    classcover only
    terrain   [[x, y]]                    guarding only
    guards    [{"x","y","range"}]         guarding only
    l         depth bound (shallow)
    threshold UDG radius (matching)

ids are implicit by position when absent.
"""

from __future__ import annotations

import json
from typing import Any

from .. import covering, packing
from ..covering import ClassCoverInstance, CoverInstance, Guard, GuardingInstance
from ..geom import LINF, L2, Disk, Point2, Square, TerrainChain

KINDS = ("shallow", "matching", "cover", "classcover", "guarding")


def _points(raw) -> tuple[Point2, ...]:
    return tuple(Point2(float(x), float(y)) for x, y in raw)


def _objects(raw, metric: str):
    cls = Square if metric == LINF else Disk
    return [cls(Point2(float(o["cx"]), float(o["cy"])), float(o["r"]),
                int(o.get("id", i)))
            for i, o in enumerate(raw)]


def instance_to_dict(kind: str, inst: Any) -> dict:
    if kind == "shallow":
        metric = LINF if inst.objects and isinstance(inst.objects[0], Square) else L2
        return {
            "kind": kind,
            "metric": metric,
            "objects": [{"cx": o.center.x, "cy": o.center.y,
                         "r": o.half_side if isinstance(o, Square) else o.radius,
                         "id": o.id} for o in inst.objects],
            "l": inst.l,
        }
    if kind == "matching":
        return {
            "kind": kind,
            "metric": L2,
            "points": [[p.x, p.y] for p in inst.points],
            "threshold": inst.threshold,
        }
    if kind == "cover":
        return {
            "kind": kind,
            "metric": inst.metric,
            "objects": [{"cx": o.center.x, "cy": o.center.y,
                         "r": o.half_side if isinstance(o, Square) else o.radius,
                         "id": o.id} for o in inst.objects],
            "points": [[p.x, p.y] for p in inst.points],
        }
    if kind == "classcover":
        return {
            "kind": kind,
            "metric": LINF if inst.shape == covering.SQUARE else L2,
            "points": [[p.x, p.y] for p in inst.blue],
            "red": [[p.x, p.y] for p in inst.red],
        }
    if kind == "guarding":
        return {
            "kind": kind,
            "metric": L2,
            "terrain": [[v.x, v.y] for v in inst.terrain.vertices],
            "guards": [{"x": g.pos.x, "y": g.pos.y, "range": g.range}
                       for g in inst.guards],
            "points": [[p.x, p.y] for p in inst.targets],
        }
    raise ValueError(f"unknown kind {kind!r}")


def instance_from_dict(data: dict) -> tuple[str, Any]:
    kind = data.get("kind")
    if kind not in KINDS:
        raise ValueError(f"unknown or missing kind {kind!r}")
    metric = data.get("metric", L2)
    if kind == "shallow":
        return kind, packing.ShallowSetInstance(
            _objects(data["objects"], metric), int(data["l"]))
    if kind == "matching":
        return kind, packing.TriangleMatchingInstance.from_points(
            _points(data["points"]), float(data.get("threshold", 1.0)))
    if kind == "cover":
        return kind, CoverInstance(_objects(data["objects"], metric),
                                   _points(data["points"]), preprocess=False)
    if kind == "classcover":
        shape = covering.SQUARE if metric == LINF else covering.DISK
        return kind, ClassCoverInstance(_points(data["points"]),
                                        _points(data.get("red", [])), shape)
    guards = [Guard(Point2(float(g["x"]), float(g["y"])), float(g["range"]))
              for g in data["guards"]]
    terrain = TerrainChain(_points(data["terrain"]))
    return kind, GuardingInstance(terrain, guards, _points(data["points"]))


def save_instance(path: str, kind: str, inst: Any) -> None:
    with open(path, "w") as fh:
        json.dump(instance_to_dict(kind, inst), fh, indent=1)
        fh.write("\n")


def load_instance(path: str) -> tuple[str, Any]:
    with open(path) as fh:
        return instance_from_dict(json.load(fh))


def solution_to_dict(kind: str, k: int, solution, value: int,
                     candidates=None) -> dict:
    out = {
        "kind": kind,
        "k": k,
        "selected": list(solution.selected),
        "value": value,
        "iterations": solution.iterations,
        "trace": [[list(rem), list(add)] for rem, add in solution.trace],
    }
    if candidates is not None:
        out["candidates"] = [{"cx": c.center.x, "cy": c.center.y,
                              "r": c.half_side if isinstance(c, Square) else c.radius,
                              "id": c.id} for c in candidates]
    return out
