"""Pure-Python BFS and dominating-set kernels over bitmask adjacency.

Adjacency is a sequence of Python ints; bit j of adj[i] set means vertices
i and j are adjacent. The compiled extension implements the same contract;
both must return identical results (including witness identity), which the
test suite cross-checks.
"""

from __future__ import annotations

BACKEND = "pure"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bfs_distances(adj, n: int, src: int) -> list[int]:
    """Single-source shortest paths; -1 marks unreachable vertices."""
    dist = [-1] * n
    dist[src] = 0
    seen = frontier = 1 << src
    d = 0
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        d += 1
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def eccentricities(adj, n: int) -> list[int]:
    """Eccentricity per vertex; -1 when some vertex is unreachable from it."""
    full = (1 << n) - 1
    ecc = [0] * n
    for src in range(n):
        seen = frontier = 1 << src
        d = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            nxt &= ~seen
            if nxt:
                d += 1
            seen |= nxt
            frontier = nxt
        ecc[src] = d if seen == full else -1
    return ecc


def all_pairs_distances(adj, n: int) -> list[list[int]]:
    return [bfs_distances(adj, n, src) for src in range(n)]


def _search(closed, degree_order, uncovered: int, remaining: int, chosen: list[int], collect):
    """Depth-limited branch on an uncovered vertex of minimum degree.

    Candidates are its closed neighborhood in ascending index order, so
    the first solution found is deterministic. When ``collect`` is None the
    first solution is returned; otherwise all solutions at exact depth are
    added to ``collect`` (deduplicated by the caller's set).
    """
    if not uncovered:
        if collect is None:
            return list(chosen)
        collect.add(tuple(sorted(chosen)))
        return None
    if remaining == 0:
        return None
    # admissible bound: each further pick covers at most max_cover uncovered
    need = uncovered.bit_count()
    max_cover = 0
    for c in range(len(closed)):
        cov = (closed[c] & uncovered).bit_count()
        if cov > max_cover:
            max_cover = cov
    if max_cover * remaining < need:
        return None
    branch = -1
    for v in degree_order:
        if uncovered >> v & 1:
            branch = v
            break
    for c in _bits(closed[branch]):
        chosen.append(c)
        result = _search(closed, degree_order, uncovered & ~closed[c], remaining - 1, chosen, collect)
        chosen.pop()
        if result is not None and collect is None:
            return result
    return None


def _degree_order(closed, n: int) -> list[int]:
    # ascending (degree, index); closed-neighborhood popcount = degree + 1
    return sorted(range(n), key=lambda v: (closed[v].bit_count(), v))


def find_dominating_set(closed, n: int, k: int):
    """First dominating set of size <= k under the fixed branching order,
    or None if none exists. ``closed`` holds closed neighborhoods."""
    full = (1 << n) - 1
    return _search(closed, _degree_order(closed, n), full, k, [], None)


def enumerate_dominating_sets(closed, n: int, k: int) -> list[tuple[int, ...]]:
    """All dominating sets of size exactly k, for k = domination number.

    Complete only at the minimum size (branches stop once coverage is
    total, which at k = gamma coincides with exact depth).
    """
    full = (1 << n) - 1
    found: set[tuple[int, ...]] = set()
    _search(closed, _degree_order(closed, n), full, k, [], found)
    return sorted(found)
