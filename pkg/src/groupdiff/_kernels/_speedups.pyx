"""Compiled kernels: BFS over bitset adjacency and dominating-set search.

Mirrors _kernels.pure exactly (same branching order, same witnesses);
masks cross the boundary as Python ints and are unpacked into uint64
word arrays.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy, memset

BACKEND = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

ctypedef unsigned long long u64


cdef class _Masks:
    """n bitmasks of n bits each, unpacked to a contiguous word matrix."""
    cdef u64* words
    cdef int n
    cdef int nwords

    def __cinit__(self, masks, int n):
        cdef int i
        self.n = n
        self.nwords = (n + 63) >> 6 if n else 1
        self.words = <u64*> malloc((n if n else 1) * self.nwords * sizeof(u64))
        if self.words == NULL:
            raise MemoryError()
        for i in range(n):
            data = (<object> masks[i]).to_bytes(self.nwords * 8, "little")
            memcpy(self.words + i * self.nwords, <const unsigned char*> data, self.nwords * 8)

    cdef u64* row(self, int i) nogil:
        return self.words + i * self.nwords

    def __dealloc__(self):
        if self.words != NULL:
            free(self.words)


cdef inline int _popcount_words(u64* w, int nwords) nogil:
    cdef int total = 0
    cdef int i
    for i in range(nwords):
        total += __builtin_popcountll(w[i])
    return total


cdef inline bint _is_zero(u64* w, int nwords) nogil:
    cdef int i
    for i in range(nwords):
        if w[i]:
            return False
    return True


cdef void _bfs(_Masks m, int src, u64* seen, u64* frontier, u64* nxt,
               int* out_depth, int* out_count, list dist):
    """BFS core; fills dist (when not None) and reports depth + vertex count."""
    cdef int nwords = m.nwords
    cdef int d = 0, count = 1, i, v, w
    cdef u64 bits
    memset(seen, 0, nwords * sizeof(u64))
    memset(frontier, 0, nwords * sizeof(u64))
    seen[src >> 6] = frontier[src >> 6] = 1ULL << (src & 63)
    if dist is not None:
        dist[src] = 0
    while not _is_zero(frontier, nwords):
        memset(nxt, 0, nwords * sizeof(u64))
        for w in range(nwords):
            bits = frontier[w]
            while bits:
                v = (w << 6) + __builtin_ctzll(bits)
                bits &= bits - 1
                for i in range(nwords):
                    nxt[i] |= m.row(v)[i]
        for i in range(nwords):
            nxt[i] &= ~seen[i]
            seen[i] |= nxt[i]
        if not _is_zero(nxt, nwords):
            d += 1
            count += _popcount_words(nxt, nwords)
            if dist is not None:
                for w in range(nwords):
                    bits = nxt[w]
                    while bits:
                        v = (w << 6) + __builtin_ctzll(bits)
                        bits &= bits - 1
                        dist[v] = d
        memcpy(frontier, nxt, nwords * sizeof(u64))
    out_depth[0] = d
    out_count[0] = count


def bfs_distances(adj, int n, int src):
    """Single-source shortest paths; -1 marks unreachable vertices."""
    cdef _Masks m = _Masks(adj, n)
    cdef u64* buf = <u64*> malloc(3 * m.nwords * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef int depth = 0, count = 0
    dist = [-1] * n
    try:
        _bfs(m, src, buf, buf + m.nwords, buf + 2 * m.nwords, &depth, &count, dist)
    finally:
        free(buf)
    return dist


def eccentricities(adj, int n):
    """Eccentricity per vertex; -1 when some vertex is unreachable from it."""
    cdef _Masks m = _Masks(adj, n)
    cdef u64* buf = <u64*> malloc(3 * m.nwords * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    ecc = [0] * n
    cdef int src, depth = 0, count = 0
    try:
        for src in range(n):
            _bfs(m, src, buf, buf + m.nwords, buf + 2 * m.nwords, &depth, &count, None)
            ecc[src] = depth if count == n else -1
    finally:
        free(buf)
    return ecc


def all_pairs_distances(adj, int n):
    return [bfs_distances(adj, n, src) for src in range(n)]


cdef struct _SearchCtx:
    u64* closed      # n rows * nwords
    u64* uncovered   # (max_depth + 2) rows * nwords, stack
    int* order       # vertices by ascending (degree, index)
    int* chosen
    int n
    int nwords


cdef int _search(_SearchCtx* ctx, int depth, int remaining, set collect):
    """First-solution mode (collect is None): returns the success depth,
    or -1. Collect mode: gathers all exact-depth solutions, returns -1."""
    cdef u64* uncovered = ctx.uncovered + depth * ctx.nwords
    cdef u64* child = ctx.uncovered + (depth + 1) * ctx.nwords
    cdef int nwords = ctx.nwords
    cdef int i, v, w, c, cov, branch, need, max_cover, result
    cdef u64 bits
    if _is_zero(uncovered, nwords):
        if collect is None:
            return depth
        collect.add(tuple(sorted([ctx.chosen[i] for i in range(depth)])))
        return -1
    if remaining == 0:
        return -1
    need = _popcount_words(uncovered, nwords)
    max_cover = 0
    for c in range(ctx.n):
        cov = 0
        for i in range(nwords):
            cov += __builtin_popcountll(ctx.closed[c * nwords + i] & uncovered[i])
        if cov > max_cover:
            max_cover = cov
    if max_cover * remaining < need:
        return -1
    branch = 0
    for i in range(ctx.n):
        v = ctx.order[i]
        if uncovered[v >> 6] >> (v & 63) & 1:
            branch = v
            break
    for w in range(nwords):
        bits = ctx.closed[branch * nwords + w]
        while bits:
            c = (w << 6) + __builtin_ctzll(bits)
            bits &= bits - 1
            ctx.chosen[depth] = c
            for i in range(nwords):
                child[i] = uncovered[i] & ~ctx.closed[c * nwords + i]
            result = _search(ctx, depth + 1, remaining - 1, collect)
            if result >= 0:
                return result
    return -1


cdef int _run_search(_Masks m, int n, int k, set collect, list witness) except -2:
    cdef _SearchCtx ctx
    cdef int i, result
    ctx.closed = m.words
    ctx.n = n
    ctx.nwords = m.nwords
    ctx.uncovered = <u64*> malloc((k + 2) * m.nwords * sizeof(u64))
    ctx.order = <int*> malloc((n if n else 1) * sizeof(int))
    ctx.chosen = <int*> malloc((k + 1) * sizeof(int))
    if ctx.uncovered == NULL or ctx.order == NULL or ctx.chosen == NULL:
        free(ctx.uncovered)
        free(ctx.order)
        free(ctx.chosen)
        raise MemoryError()
    try:
        memset(ctx.uncovered, 0, ctx.nwords * sizeof(u64))
        for i in range(n):
            ctx.uncovered[i >> 6] |= 1ULL << (i & 63)
        degrees = [_popcount_words(m.row(i), m.nwords) for i in range(n)]
        order = sorted(range(n), key=lambda v: (degrees[v], v))
        for i in range(n):
            ctx.order[i] = order[i]
        result = _search(&ctx, 0, k, collect)
        if result >= 0 and witness is not None:
            for i in range(result):
                witness.append(ctx.chosen[i])
        return result
    finally:
        free(ctx.uncovered)
        free(ctx.order)
        free(ctx.chosen)


def find_dominating_set(closed, int n, int k):
    """First dominating set of size <= k under the fixed branching order,
    or None if none exists. ``closed`` holds closed neighborhoods."""
    cdef _Masks m = _Masks(closed, n)
    witness: list = []
    if _run_search(m, n, k, None, witness) >= 0:
        return witness
    return None


def enumerate_dominating_sets(closed, int n, int k):
    """All dominating sets of size exactly k, for k = domination number."""
    cdef _Masks m = _Masks(closed, n)
    found: set = set()
    _run_search(m, n, k, found, None)
    return sorted(found)
