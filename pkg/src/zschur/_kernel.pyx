# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled reachability and search kernels.

Word-packed translation of ``zschur._kernel_py``: the bitset rows become
flat uint64 arrays and the search loop runs without the GIL, so worker
threads from the solver's pool actually overlap.  Semantics (branch
order, node and prune counts, returned colorings) must match the pure
kernel bit for bit; the equivalence tests hold both to that.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy
from posix.time cimport CLOCK_MONOTONIC, clock_gettime, timespec

BACKEND = "compiled"

cdef enum:
    C_EXHAUSTED = 0
    C_FOUND = 1
    C_BUDGET = 3
    DEADLINE_STRIDE = 1024  # nodes between wall-clock checks

EXHAUSTED = C_EXHAUSTED
FOUND = C_FOUND
BUDGET = C_BUDGET


cdef inline void _add_value(uint64_t* tab, int v, int cv, int k, int r,
                            int W) noexcept nogil:
    # tab layout: ((j * r) + c) * W + word. Rows j-1 and j never alias.
    cdef int j, c, src_c, w, wo, bo
    cdef uint64_t* dst
    cdef uint64_t* src
    wo = v >> 6
    bo = v & 63
    for j in range(1, k):
        for c in range(r):
            src_c = c - cv
            if src_c < 0:
                src_c += r
            dst = tab + ((j * r) + c) * W
            src = tab + (((j - 1) * r) + src_c) * W
            if bo == 0:
                for w in range(wo, W):
                    dst[w] |= src[w - wo]
            else:
                dst[wo] |= src[0] << bo
                for w in range(wo + 1, W):
                    dst[w] |= (src[w - wo] << bo) | (src[w - wo - 1] >> (64 - bo))


cdef inline bint _hit(uint64_t* tab, int target, int need_c, int k, int r,
                      int W) noexcept nogil:
    cdef uint64_t word = tab[(((k - 1) * r) + need_c) * W + (target >> 6)]
    return (word >> (target & 63)) & 1


cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return ts.tv_sec + ts.tv_nsec * 1e-9


def first_zero_sum_target(values, int n, int k, int r):
    """Least target in [k-1, n] completing a zero-sum solution, else 0."""
    if n < k - 1:
        return 0
    cdef int W = ((n + 1) + 63) >> 6
    cdef uint64_t* tab = <uint64_t*>calloc(<size_t>k * r * W, sizeof(uint64_t))
    cdef int* cols = <int*>malloc(<size_t>n * sizeof(int))
    if tab == NULL or cols == NULL:
        free(tab)
        free(cols)
        raise MemoryError()
    cdef int i, target, cap, need
    cdef int v = 0
    cdef int result = 0
    try:
        for i in range(n):
            cols[i] = values[i]
        tab[0] = 1  # empty selection: j=0, c=0, sum 0
        with nogil:
            for target in range(k - 1, n + 1):
                cap = target - k + 2
                while v < cap:
                    v += 1
                    _add_value(tab, v, cols[v - 1], k, r, W)
                need = r - cols[target - 1]
                if need == r:
                    need = 0
                if _hit(tab, target, need, k, r, W):
                    result = target
                    break
        return result
    finally:
        free(tab)
        free(cols)


def search_free_coloring(int n, int k, int r, palette, prefix, int fix_first,
                         unsigned long long canonical_mask, max_nodes,
                         deadline):
    """Depth-first search for a solution-free coloring of [1..n].

    Same contract as the pure kernel: returns (status, coloring or None,
    nodes, prunes, max_depth).
    """
    cdef int d = len(prefix)
    cdef int i
    if d >= n:
        return (FOUND, [prefix[i] for i in range(n)], 0, 0, d)

    cdef int W = ((n + 1) + 63) >> 6
    cdef int slab = k * r * W
    cdef int npal = len(palette)
    cdef uint64_t* tabs = <uint64_t*>calloc(<size_t>(n + 2) * slab,
                                            sizeof(uint64_t))
    cdef int* colors = <int*>calloc(n + 2, sizeof(int))
    cdef int* cidx = <int*>calloc(n + 2, sizeof(int))
    cdef int* fnz = <int*>calloc(n + 2, sizeof(int))
    cdef int* pal = <int*>malloc(npal * sizeof(int))
    if tabs == NULL or colors == NULL or cidx == NULL or fnz == NULL or pal == NULL:
        free(tabs); free(colors); free(cidx); free(fnz); free(pal)
        raise MemoryError()

    cdef bint has_budget = max_nodes is not None
    cdef int64_t budget = max_nodes if has_budget else 0
    cdef bint has_deadline = deadline is not None
    cdef double dl = deadline if has_deadline else 0.0

    cdef int64_t nodes = 0, prunes = 0
    cdef int pos, c, v, need
    cdef int max_depth = d
    cdef int status = C_EXHAUSTED
    cdef bint done = 0, advanced
    cdef uint64_t* base

    try:
        for i in range(npal):
            pal[i] = palette[i]
        for i in range(d):
            colors[i + 1] = prefix[i]
        base = tabs + d * slab
        base[0] = 1
        for v in range(1, max(0, d - k + 2) + 1):
            _add_value(base, v, colors[v], k, r, W)
        for i in range(1, d + 1):
            if colors[i] != 0:
                fnz[d] = i
                break

        with nogil:
            pos = d + 1
            cidx[pos] = 0
            memcpy(tabs + pos * slab, tabs + (pos - 1) * slab,
                   slab * sizeof(uint64_t))
            v = pos - k + 2
            if v >= 1:
                _add_value(tabs + pos * slab, v, colors[v], k, r, W)
            while not done:
                advanced = 0
                while cidx[pos] < npal:
                    c = pal[cidx[pos]]
                    cidx[pos] += 1
                    if pos == 1 and fix_first >= 0 and c != fix_first:
                        continue
                    if (canonical_mask != 0 and c != 0 and fnz[pos - 1] == 0
                            and ((canonical_mask >> c) & 1) == 0):
                        continue
                    nodes += 1
                    if has_budget and nodes > budget:
                        nodes -= 1
                        status = C_BUDGET
                        done = 1
                        break
                    if (has_deadline and nodes % DEADLINE_STRIDE == 0
                            and _now() > dl):
                        status = C_BUDGET
                        done = 1
                        break
                    if pos >= k - 1:
                        need = r - c
                        if need == r:
                            need = 0
                        if _hit(tabs + pos * slab, pos, need, k, r, W):
                            prunes += 1
                            continue
                    colors[pos] = c
                    if fnz[pos - 1]:
                        fnz[pos] = fnz[pos - 1]
                    else:
                        fnz[pos] = pos if c else 0
                    if pos > max_depth:
                        max_depth = pos
                    if pos == n:
                        status = C_FOUND
                        done = 1
                        break
                    pos += 1
                    cidx[pos] = 0
                    memcpy(tabs + pos * slab, tabs + (pos - 1) * slab,
                           slab * sizeof(uint64_t))
                    v = pos - k + 2
                    if v >= 1:
                        _add_value(tabs + pos * slab, v, colors[v], k, r, W)
                    advanced = 1
                    break
                if done:
                    break
                if advanced:
                    continue
                pos -= 1
                if pos <= d:
                    done = 1  # status stays EXHAUSTED

        if status == C_FOUND:
            return (FOUND, [colors[i] for i in range(1, n + 1)],
                    nodes, prunes, max_depth)
        return (status, None, nodes, prunes, max_depth)
    finally:
        free(tabs); free(colors); free(cidx); free(fnz); free(pal)
