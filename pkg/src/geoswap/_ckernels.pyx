# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: masked-popcount depth tables, coverage/disjointness
bitset checks, dense containment scans. Mirrors ``_pykernels`` contracts for
object counts up to 64 (the dispatch layer falls back beyond that)."""

from libc.math cimport sqrt, fabs

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define GS_POPCOUNT64(x) __builtin_popcountll(x)
    #else
    static int GS_POPCOUNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int GS_POPCOUNT64(unsigned long long x) nogil


def depth_max(unsigned long long[::1] rows, unsigned long long mask):
    cdef Py_ssize_t i
    cdef int best = 0, c
    with nogil:
        for i in range(rows.shape[0]):
            c = GS_POPCOUNT64(rows[i] & mask)
            if c > best:
                best = c
    return best


def cover_ok(unsigned long long[:, ::1] rows, unsigned long long[::1] full,
             unsigned long long sel_mask):
    cdef Py_ssize_t nw = rows.shape[1], i, w
    cdef unsigned long long acc[128]
    cdef bint done
    if nw > 128:
        raise ValueError("too many point words for the compiled kernel")
    for w in range(nw):
        acc[w] = 0
    for i in range(rows.shape[0]):
        if (sel_mask >> i) & 1:
            for w in range(nw):
                acc[w] |= rows[i, w]
    done = True
    for w in range(nw):
        if acc[w] != full[w]:
            done = False
            break
    return bool(done)


def disjoint_ok(unsigned long long[::1] masks, unsigned long long sel_mask):
    cdef Py_ssize_t i
    cdef unsigned long long acc = 0, vm
    for i in range(masks.shape[0]):
        if (sel_mask >> i) & 1:
            vm = masks[i]
            if acc & vm:
                return False
            acc |= vm
    return True


def point_depth_max(double[::1] px, double[::1] py, double[::1] cx,
                    double[::1] cy, double[::1] rr, bint linf, double tol):
    cdef Py_ssize_t i, j
    cdef int best = 0, c
    cdef double dx, dy, d
    with nogil:
        for i in range(px.shape[0]):
            c = 0
            for j in range(cx.shape[0]):
                dx = fabs(px[i] - cx[j])
                dy = fabs(py[i] - cy[j])
                if linf:
                    d = dx if dx > dy else dy
                else:
                    d = sqrt(dx * dx + dy * dy)
                if d - rr[j] <= tol:
                    c += 1
            if c > best:
                best = c
    return best


def grid_depth(double[::1] cx, double[::1] cy, double[::1] rr, double x0,
               double y0, double step, Py_ssize_t nx, Py_ssize_t ny,
               bint linf, double tol):
    cdef Py_ssize_t ix, iy, j
    cdef int best = 0, c
    cdef double x, y, dx, dy, d
    with nogil:
        for iy in range(ny):
            y = y0 + iy * step
            for ix in range(nx):
                x = x0 + ix * step
                c = 0
                for j in range(cx.shape[0]):
                    dx = fabs(x - cx[j])
                    dy = fabs(y - cy[j])
                    if linf:
                        d = dx if dx > dy else dy
                    else:
                        d = sqrt(dx * dx + dy * dy)
                    if d - rr[j] <= tol:
                        c += 1
                if c > best:
                    best = c
    return best
