# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int64_t

BACKEND = "cython"

ctypedef struct UF:
    int *parent
    int *size


cdef inline int uf_find(UF *uf, int x) nogil:
    while uf.parent[x] != x:
        x = uf.parent[x]
    return x


cdef inline int uf_union(UF *uf, int a, int b) nogil:
    cdef int t
    if uf.size[a] < uf.size[b]:
        t = a
        a = b
        b = t
    uf.parent[b] = a
    uf.size[a] += uf.size[b]
    return b


cdef inline void uf_undo(UF *uf, int b) nogil:
    cdef int a = uf.parent[b]
    uf.parent[b] = b
    uf.size[a] -= uf.size[b]


cdef int uf_init(UF *uf, int n):
    cdef int i
    uf.parent = <int *> malloc(max(n, 1) * sizeof(int))
    uf.size = <int *> malloc(max(n, 1) * sizeof(int))
    if uf.parent == NULL or uf.size == NULL:
        return -1
    for i in range(n):
        uf.parent[i] = i
        uf.size[i] = 1
    return 0


cdef void uf_free(UF *uf):
    free(uf.parent)
    free(uf.size)


cdef int *int_array(seq) except NULL:
    cdef Py_ssize_t k, n = len(seq)
    cdef int *out = <int *> malloc(max(n, 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    for k in range(n):
        out[k] = seq[k]
    return out


def connected_subsets(int n, adj):
    cdef uint64_t *a = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    cdef uint64_t mask, seen, frontier, low, new, limit
    cdef int v
    out = []
    for v in range(n):
        a[v] = adj[v]
    limit = (<uint64_t> 1) << n
    mask = 3
    try:
        while mask < limit:
            if mask & (mask - 1):
                seen = mask & (~mask + 1)
                frontier = seen
                while frontier:
                    low = frontier & (~frontier + 1)
                    frontier ^= low
                    v = 0
                    while (low >> v) != 1:
                        v += 1
                    new = a[v] & mask & ~seen
                    seen |= new
                    frontier |= new
                if seen == mask:
                    out.append(mask)
            mask += 1
    finally:
        free(a)
    return out


cdef struct ClassicalState:
    int m
    int *eu
    int *ev
    UF uf
    int64_t *coef


cdef void classical_rec(ClassicalState *s, int i, int comps, int sign) nogil:
    cdef int a, b, child
    if i == s.m:
        s.coef[comps] += sign
        return
    classical_rec(s, i + 1, comps, sign)
    a = uf_find(&s.uf, s.eu[i])
    b = uf_find(&s.uf, s.ev[i])
    if a == b:
        classical_rec(s, i + 1, comps, -sign)
    else:
        child = uf_union(&s.uf, a, b)
        classical_rec(s, i + 1, comps - 1, -sign)
        uf_undo(&s.uf, child)


def classical_coefficients(int n, eu, ev):
    cdef ClassicalState s
    s.m = len(eu)
    s.eu = int_array(eu)
    s.ev = int_array(ev)
    s.coef = <int64_t *> calloc(n + 1, sizeof(int64_t))
    uf_init(&s.uf, n)
    try:
        with nogil:
            classical_rec(&s, 0, n, 1)
        return [s.coef[k] for k in range(n + 1)]
    finally:
        free(s.eu)
        free(s.ev)
        free(s.coef)
        uf_free(&s.uf)


cdef struct SpanState:
    int m
    int *eu
    int *ev
    UF uf
    int64_t total
    int collect
    uint64_t *buf
    Py_ssize_t count
    Py_ssize_t cap
    int overflow


cdef void span_push(SpanState *s, uint64_t mask) nogil:
    cdef uint64_t *grown
    cdef Py_ssize_t k
    if s.count == s.cap:
        grown = <uint64_t *> malloc(2 * s.cap * sizeof(uint64_t))
        if grown == NULL:
            s.overflow = 1
            return
        for k in range(s.count):
            grown[k] = s.buf[k]
        free(s.buf)
        s.buf = grown
        s.cap *= 2
    s.buf[s.count] = mask
    s.count += 1


cdef void connected_rec(SpanState *s, int i, int comps, uint64_t mask, int sign) nogil:
    cdef int a, b, child
    if comps - 1 > s.m - i:
        return
    if i == s.m:
        s.total += sign
        if s.collect:
            span_push(s, mask)
        return
    connected_rec(s, i + 1, comps, mask, sign)
    a = uf_find(&s.uf, s.eu[i])
    b = uf_find(&s.uf, s.ev[i])
    if a == b:
        connected_rec(s, i + 1, comps, mask | ((<uint64_t> 1) << i), -sign)
    else:
        child = uf_union(&s.uf, a, b)
        connected_rec(s, i + 1, comps - 1, mask | ((<uint64_t> 1) << i), -sign)
        uf_undo(&s.uf, child)


cdef void tree_rec(SpanState *s, int i, int size, int need, uint64_t mask) nogil:
    cdef int a, b, child
    if size == need:
        span_push(s, mask)
        return
    if size + (s.m - i) < need:
        return
    a = uf_find(&s.uf, s.eu[i])
    b = uf_find(&s.uf, s.ev[i])
    if a != b:
        child = uf_union(&s.uf, a, b)
        tree_rec(s, i + 1, size + 1, need, mask | ((<uint64_t> 1) << i))
        uf_undo(&s.uf, child)
    tree_rec(s, i + 1, size, need, mask)


cdef int span_init(SpanState *s, int n, eu, ev, int collect) except -1:
    s.m = len(eu)
    s.eu = int_array(eu)
    s.ev = int_array(ev)
    s.total = 0
    s.collect = collect
    s.cap = 64
    s.count = 0
    s.overflow = 0
    s.buf = <uint64_t *> malloc(s.cap * sizeof(uint64_t))
    uf_init(&s.uf, n)
    return 0


cdef span_finish(SpanState *s):
    try:
        if s.overflow:
            raise MemoryError()
        return [s.buf[k] for k in range(s.count)]
    finally:
        free(s.eu)
        free(s.ev)
        free(s.buf)
        uf_free(&s.uf)


def signed_connected_sum(int n, eu, ev):
    cdef SpanState s
    if n <= 1:
        return 1
    span_init(&s, n, eu, ev, 0)
    with nogil:
        connected_rec(&s, 0, n, 0, 1)
    total = s.total
    span_finish(&s)
    return total


def connected_spanning_masks(int n, eu, ev):
    cdef SpanState s
    if n <= 1:
        return [0]
    span_init(&s, n, eu, ev, 1)
    with nogil:
        connected_rec(&s, 0, n, 0, 1)
    return span_finish(&s)


def spanning_tree_masks(int n, eu, ev):
    cdef SpanState s
    if n <= 1:
        return [0]
    span_init(&s, n, eu, ev, 1)
    with nogil:
        tree_rec(&s, 0, 0, n - 1, 0)
    return span_finish(&s)


cdef struct ForestState:
    SpanState span
    int64_t *counts
    uint64_t *blk
    int *blk_start


cdef void forest_rec(ForestState *s, int i, int size, uint64_t mask) nogil:
    cdef int a, b, child, k
    cdef uint64_t grown
    if i == s.span.m:
        s.counts[size] += 1
        if s.span.collect:
            span_push(&s.span, mask)
        return
    forest_rec(s, i + 1, size, mask)
    a = uf_find(&s.span.uf, s.span.eu[i])
    b = uf_find(&s.span.uf, s.span.ev[i])
    if a == b:
        return
    grown = mask | ((<uint64_t> 1) << i)
    for k in range(s.blk_start[i], s.blk_start[i + 1]):
        if s.blk[k] & ~grown == 0:
            return
    child = uf_union(&s.span.uf, a, b)
    forest_rec(s, i + 1, size + 1, grown)
    uf_undo(&s.span.uf, child)


def forests(int n, eu, ev, blockers, collect):
    cdef ForestState s
    cdef int m = len(eu)
    cdef int i, k = 0, total = 0
    for group in blockers:
        total += len(group)
    s.blk = <uint64_t *> malloc(max(total, 1) * sizeof(uint64_t))
    s.blk_start = <int *> malloc((m + 1) * sizeof(int))
    s.counts = <int64_t *> calloc(max(n, 1), sizeof(int64_t))
    for i in range(m):
        s.blk_start[i] = k
        for bad in blockers[i]:
            s.blk[k] = bad
            k += 1
    s.blk_start[m] = k
    span_init(&s.span, n, eu, ev, 1 if collect else 0)
    try:
        with nogil:
            forest_rec(&s, 0, 0, 0)
        counts = [s.counts[i] for i in range(max(n, 1))]
    finally:
        free(s.blk)
        free(s.blk_start)
        free(s.counts)
    masks = span_finish(&s.span)
    return counts, (masks if collect else None)


def minimal_tree_extension(int n, eu, ev, uint64_t tree_mask):
    cdef int m = len(eu)
    cdef int *u = int_array(eu)
    cdef int *v = int_array(ev)
    cdef int *parent = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *pedge = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *depth = <int *> calloc(max(n, 1), sizeof(int))
    cdef int i, j, x, y, t, top, changed
    cdef uint64_t ext = 0
    try:
        for i in range(n):
            parent[i] = -2
            pedge[i] = -1
        parent[0] = -1
        # relax tree edges until every vertex hangs off the root; trees are tiny
        changed = 1
        while changed:
            changed = 0
            for i in range(m):
                if not (tree_mask >> i) & 1:
                    continue
                x = u[i]
                y = v[i]
                if parent[x] != -2 and parent[y] == -2:
                    parent[y] = x
                    pedge[y] = i
                    depth[y] = depth[x] + 1
                    changed = 1
                elif parent[y] != -2 and parent[x] == -2:
                    parent[x] = y
                    pedge[x] = i
                    depth[x] = depth[y] + 1
                    changed = 1
        for j in range(m):
            if (tree_mask >> j) & 1:
                continue
            x = u[j]
            y = v[j]
            top = -1
            while x != y:
                if depth[x] < depth[y]:
                    t = x
                    x = y
                    y = t
                if pedge[x] > top:
                    top = pedge[x]
                x = parent[x]
            if j > top:
                ext |= (<uint64_t> 1) << j
        return ext
    finally:
        free(u)
        free(v)
        free(parent)
        free(pedge)
        free(depth)


cdef struct ColorState:
    int n
    int q
    int *color
    int *start
    int *nbr
    unsigned char *used


cdef int64_t color_rec(ColorState *s, int v) nogil:
    cdef int c, k, free_colors
    cdef int64_t total = 0
    cdef bint ok
    if v == s.n - 1:
        free_colors = s.q
        for k in range(s.start[v], s.start[v + 1]):
            c = s.color[s.nbr[k]]
            if not s.used[c]:
                s.used[c] = 1
                free_colors -= 1
        for k in range(s.start[v], s.start[v + 1]):
            s.used[s.color[s.nbr[k]]] = 0
        return free_colors
    for c in range(s.q):
        ok = True
        for k in range(s.start[v], s.start[v + 1]):
            if s.color[s.nbr[k]] == c:
                ok = False
                break
        if ok:
            s.color[v] = c
            total += color_rec(s, v + 1)
    return total


def count_colorings(int n, earlier, int q):
    cdef ColorState s
    cdef int v, k = 0, total = 0
    cdef int64_t result
    if n == 0:
        return 1
    if q <= 0:
        return 0
    for group in earlier:
        total += len(group)
    s.n = n
    s.q = q
    s.color = <int *> calloc(n, sizeof(int))
    s.start = <int *> malloc((n + 1) * sizeof(int))
    s.nbr = <int *> malloc(max(total, 1) * sizeof(int))
    s.used = <unsigned char *> calloc(q, sizeof(unsigned char))
    for v in range(n):
        s.start[v] = k
        for u in earlier[v]:
            s.nbr[k] = u
            k += 1
    s.start[n] = k
    try:
        with nogil:
            result = color_rec(&s, 0)
        return result
    finally:
        free(s.color)
        free(s.start)
        free(s.nbr)
        free(s.used)
