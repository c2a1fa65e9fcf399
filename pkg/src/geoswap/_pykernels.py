"""Pure-Python / numpy fallback for the hot kernels.

Same contracts as ``_ckernels``; selected automatically when the compiled
extension is unavailable (or forced via GEOSWAP_PURE=1). Bit rows are plain
Python ints here, so there is no 64-object limit on this path.
"""

from __future__ import annotations

import numpy as np

_ROW_CHUNK = 256  # grid rows per vectorized block, bounds memory at ~30 MB


def depth_max(rows, mask):
    best = 0
    for r in rows:
        c = (r & mask).bit_count()
        if c > best:
            best = c
    return best


def cover_ok(rows, full, sel_mask):
    acc = 0
    m = sel_mask
    while m:
        low = m & -m
        acc |= rows[low.bit_length() - 1]
        if acc == full:
            return True
        m ^= low
    return acc == full


def disjoint_ok(masks, sel_mask):
    acc = 0
    m = sel_mask
    while m:
        low = m & -m
        vm = masks[low.bit_length() - 1]
        if acc & vm:
            return False
        acc |= vm
        m ^= low
    return True


def point_depth_max(px, py, cx, cy, rr, linf, tol):
    if len(px) == 0 or len(cx) == 0:
        return 0
    px = np.asarray(px, dtype=np.float64)
    py = np.asarray(py, dtype=np.float64)
    cx = np.asarray(cx, dtype=np.float64)
    cy = np.asarray(cy, dtype=np.float64)
    rr = np.asarray(rr, dtype=np.float64)
    dx = px[:, None] - cx[None, :]
    dy = py[:, None] - cy[None, :]
    if linf:
        d = np.maximum(np.abs(dx), np.abs(dy))
    else:
        d = np.sqrt(dx * dx + dy * dy)
    return int((d - rr[None, :] <= tol).sum(axis=1).max())


def grid_depth(cx, cy, rr, x0, y0, step, nx, ny, linf, tol):
    if nx <= 0 or ny <= 0 or len(cx) == 0:
        return 0
    cx = np.asarray(cx, dtype=np.float64)
    cy = np.asarray(cy, dtype=np.float64)
    rr = np.asarray(rr, dtype=np.float64)
    xs = x0 + np.arange(nx, dtype=np.float64) * step
    best = 0
    for row0 in range(0, ny, _ROW_CHUNK):
        ys = y0 + np.arange(row0, min(row0 + _ROW_CHUNK, ny), dtype=np.float64) * step
        depth = np.zeros((len(ys), nx), dtype=np.int32)
        for j in range(len(cx)):
            dx = np.abs(xs[None, :] - cx[j])
            dy = np.abs(ys[:, None] - cy[j])
            if linf:
                d = np.maximum(dx, dy)
            else:
                d = np.sqrt(dx * dx + dy * dy)
            depth += d - rr[j] <= tol
        m = int(depth.max())
        if m > best:
            best = m
    return best
