"""Kernel dispatch: compiled Cython core when available, pure fallback otherwise.

Set GEOSWAP_PURE=1 to force the fallback. The compiled bitset kernels handle up
to 64 ground-set objects; tables transparently use the pure path beyond that.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # pragma: no cover - depends on the build environment
    _ckernels = None

_FORCE_PURE = os.environ.get("GEOSWAP_PURE", "") == "1"
BACKEND = "compiled" if (_ckernels is not None and not _FORCE_PURE) else "pure"


def backend_name() -> str:
    return BACKEND


def _impl(backend: str | None):
    name = backend or BACKEND
    if name == "compiled":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    if name == "pure":
        return _pykernels
    raise ValueError(f"unknown backend {name!r}")


class DepthTable:
    """Rows of containment bitmasks; max_depth(mask) = max popcount(row & mask)."""

    def __init__(self, rows: Sequence[int], nbits: int, backend: str | None = None):
        name = backend or BACKEND
        self._compiled = name == "compiled" and nbits <= 64
        self._mod = _impl(name) if self._compiled else _pykernels
        if self._compiled:
            self._rows = np.asarray(list(rows), dtype=np.uint64)
        else:
            self._rows = list(rows)

    def max_depth(self, mask: int) -> int:
        return self._mod.depth_max(self._rows, mask)


class CoverTable:
    """Per-object point-coverage bitmasks; covers_all(mask) tests full coverage."""

    def __init__(self, rows: Sequence[int], n_points: int, backend: str | None = None):
        name = backend or BACKEND
        nwords = max(1, (n_points + 63) // 64)
        self._compiled = name == "compiled" and len(rows) <= 64 and nwords <= 128
        full = (1 << n_points) - 1
        if self._compiled:
            packed = np.zeros((max(1, len(rows)), nwords), dtype=np.uint64)
            for i, r in enumerate(rows):
                for w in range(nwords):
                    packed[i, w] = (r >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
            self._rows = packed
            self._full = np.array(
                [(full >> (64 * w)) & 0xFFFFFFFFFFFFFFFF for w in range(nwords)],
                dtype=np.uint64,
            )
            self._mod = _impl(name)
        else:
            self._rows = list(rows)
            self._full = full
            self._mod = _pykernels

    def covers_all(self, mask: int) -> bool:
        return bool(self._mod.cover_ok(self._rows, self._full, mask))


class DisjointTable:
    """Per-element vertex bitmasks; disjoint(mask) tests pairwise disjointness."""

    def __init__(self, masks: Sequence[int], n_vertices: int, backend: str | None = None):
        name = backend or BACKEND
        self._compiled = name == "compiled" and len(masks) <= 64 and n_vertices <= 64
        if self._compiled:
            self._masks = np.asarray(list(masks), dtype=np.uint64)
            self._mod = _impl(name)
        else:
            self._masks = list(masks)
            self._mod = _pykernels

    def disjoint(self, mask: int) -> bool:
        return bool(self._mod.disjoint_ok(self._masks, mask))


def point_depth_max(px, py, cx, cy, rr, linf: bool, tol: float,
                    backend: str | None = None) -> int:
    name = backend or BACKEND
    if name == "compiled":
        return _ckernels.point_depth_max(
            np.asarray(px, dtype=np.float64),
            np.asarray(py, dtype=np.float64),
            np.asarray(cx, dtype=np.float64),
            np.asarray(cy, dtype=np.float64),
            np.asarray(rr, dtype=np.float64),
            linf,
            tol,
        )
    return _pykernels.point_depth_max(px, py, cx, cy, rr, linf, tol)


def grid_depth(cx, cy, rr, x0: float, y0: float, step: float, nx: int, ny: int,
               linf: bool, tol: float, backend: str | None = None) -> int:
    name = backend or BACKEND
    if name == "compiled":
        return _ckernels.grid_depth(
            np.asarray(cx, dtype=np.float64),
            np.asarray(cy, dtype=np.float64),
            np.asarray(rr, dtype=np.float64),
            x0,
            y0,
            step,
            nx,
            ny,
            linf,
            tol,
        )
    return _pykernels.grid_depth(cx, cy, rr, x0, y0, step, nx, ny, linf, tol)
