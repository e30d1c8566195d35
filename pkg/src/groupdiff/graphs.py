"""Power, enhanced power and difference graphs; BFS, diameter, export.

Vertices keep their group element indices. Internally each graph stores
adjacency as bitmasks over vertex *positions* (index into the sorted
vertex list), which is the representation the BFS/domination kernels
consume; the public API speaks element ids throughout.
"""

from __future__ import annotations

import json
import math

from . import _kernels
from .errors import EmptyGraphError, IdentityError, VertexError
from .groups import FiniteGroup, build_group
from .specs import Cyclic, is_prime_power
from .subgroups import maximal_cyclic_subgroups


class GroupGraph:
    """Simple undirected graph on a subset of group elements.

    Immutable after construction; BFS from distinct sources may run
    concurrently.
    """

    def __init__(self, kind: str, vertices, orders, adj_bits, group_ref: str):
        self.kind = kind
        self.vertices = tuple(vertices)  # sorted element ids
        self.orders = tuple(orders)  # element order per vertex
        self.adj = list(adj_bits)  # bitmasks over positions
        self.group_ref = group_ref
        self._pos = {v: i for i, v in enumerate(self.vertices)}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise VertexError(f"{v} is not a vertex of this {self.kind} graph")

    def has_vertex(self, v: int) -> bool:
        return v in self._pos

    def degree(self, v: int) -> int:
        return self.adj[self.position(v)].bit_count()

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[self.position(a)] >> self.position(b) & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adj[self.position(v)]
        return [self.vertices[i] for i in _bit_positions(mask)]

    def edges(self) -> list[tuple[int, int]]:
        """Edge list as element-id pairs, sorted lexicographically."""
        out = []
        for i, mask in enumerate(self.adj):
            a = self.vertices[i]
            for j in _bit_positions(mask):
                if j > i:
                    out.append((a, self.vertices[j]))
        out.sort()
        return out

    def __repr__(self):
        return (
            f"GroupGraph({self.kind!r}, {self.group_ref!r}, "
            f"V={self.num_vertices}, E={self.num_edges})"
        )


def _bit_positions(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _power_adjacency(G: FiniteGroup) -> list[int]:
    lat = maximal_cyclic_subgroups(G)
    n = G.order
    adj = [0] * n
    for g in range(n):
        members = lat.subgroup_of(g).members
        bit = 1 << g
        for m in members:
            adj[g] |= 1 << m
            adj[m] |= bit
    for g in range(n):
        adj[g] &= ~(1 << g)
    return adj


def _enhanced_adjacency(G: FiniteGroup) -> list[int]:
    lat = maximal_cyclic_subgroups(G)
    n = G.order
    adj = [0] * n
    for s, mask, flag in zip(lat.subgroups, lat.member_masks, lat.maximal_flags):
        if flag:
            for m in s.members:
                adj[m] |= mask
    for g in range(n):
        adj[g] &= ~(1 << g)
    return adj


def power_graph(G: FiniteGroup) -> GroupGraph:
    """Edge {a,b} iff one is a power of the other."""
    return GroupGraph(
        "power", range(G.order), G.orders, _power_adjacency(G), G.spec_string
    )


def enhanced_power_graph(G: FiniteGroup) -> GroupGraph:
    """Edge {a,b} iff a and b generate a cyclic subgroup, decided via the
    maximal-cyclic cover: some maximal cyclic subgroup contains both."""
    return GroupGraph(
        "enhanced", range(G.order), G.orders, _enhanced_adjacency(G), G.spec_string
    )


def difference_graph(G: FiniteGroup) -> GroupGraph | None:
    """Enhanced edges minus power edges, isolated vertices dropped.

    Returns None when no edge remains (the difference graph is then
    undefined, e.g. for every p-group).
    """
    power = _power_adjacency(G)
    enhanced = _enhanced_adjacency(G)
    diff = [e & ~p for e, p in zip(enhanced, power)]
    vertices = [v for v in range(G.order) if diff[v]]
    if not vertices:
        return None
    pos = {v: i for i, v in enumerate(vertices)}
    adj = []
    for v in vertices:
        mask = 0
        for u in _bit_positions(diff[v]):
            mask |= 1 << pos[u]
        adj.append(mask)
    orders = [G.orders[v] for v in vertices]
    return GroupGraph("difference", vertices, orders, adj, G.spec_string)


def is_isolated_in_diff(G: FiniteGroup, g: int) -> bool:
    """Whether a non-identity element is isolated in enhanced-minus-power:
    <g> is maximal cyclic, or every cyclic subgroup containing g has
    prime-power order."""
    if g == G.identity:
        raise IdentityError("the identity is always isolated; handle it separately")
    if not 0 <= g < G.order:
        raise IndexError(f"element index {g} out of range for order {G.order}")
    lat = maximal_cyclic_subgroups(G)
    if lat.is_maximal(lat.subgroup_of(g)):
        return True
    return not lat.element_in_non_prime_power_cyclic()[g]


def cyclic_difference_edge(o_a: int, o_b: int) -> bool:
    """Adjacency test for two cyclic-group elements by order alone:
    gcd(o(a), o(b)) not in {o(a), o(b)}."""
    return math.gcd(o_a, o_b) not in (o_a, o_b)


def cyclic_difference_graph(n: int) -> GroupGraph | None:
    """Fast path for the difference graph of the cyclic group of order n.

    Vertices are the non-identity non-generators; adjacency by the gcd
    test. Must agree exactly with difference_graph(build_group(Cyclic(n))).
    """
    if is_prime_power(n):
        return None
    orders = [n // math.gcd(n, g) if g else 1 for g in range(n)]
    vertices = [g for g in range(1, n) if orders[g] != n]
    adj = [0] * len(vertices)
    for i, a in enumerate(vertices):
        for j in range(i + 1, len(vertices)):
            if cyclic_difference_edge(orders[a], orders[vertices[j]]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    vorders = [orders[v] for v in vertices]
    return GroupGraph("difference", vertices, vorders, adj, str(Cyclic(n)))


def bfs_distances(graph: GroupGraph, v: int) -> dict[int, float]:
    """Exact shortest-path lengths from v, keyed by element id;
    unreachable vertices map to math.inf."""
    src = graph.position(v)
    dist = _kernels.bfs_distances(graph.adj, graph.num_vertices, src)
    return {
        u: (dist[i] if dist[i] >= 0 else math.inf)
        for i, u in enumerate(graph.vertices)
    }


def diameter(graph: GroupGraph) -> int | None:
    """Greatest BFS distance over all pairs; None when disconnected."""
    if graph.num_vertices == 0:
        raise EmptyGraphError("diameter of an empty graph")
    ecc = _kernels.eccentricities(graph.adj, graph.num_vertices)
    if any(e < 0 for e in ecc):
        return None
    return max(ecc)


def is_connected(graph: GroupGraph) -> bool:
    if graph.num_vertices == 0:
        raise EmptyGraphError("connectivity of an empty graph")
    dist = _kernels.bfs_distances(graph.adj, graph.num_vertices, 0)
    return all(d >= 0 for d in dist)


def pairs_at_distance(graph: GroupGraph, d: int) -> set[tuple[int, int]]:
    """All vertex pairs (a, b), a < b as element ids, at BFS distance d."""
    n = graph.num_vertices
    rows = _kernels.all_pairs_distances(graph.adj, n)
    out = set()
    for i in range(n):
        row = rows[i]
        for j in range(i + 1, n):
            if row[j] == d:
                a, b = graph.vertices[i], graph.vertices[j]
                out.add((a, b) if a < b else (b, a))
    return out


def induced_subgraph(graph: GroupGraph, vertex_ids) -> GroupGraph:
    """Subgraph induced on a subset of vertices (given as element ids)."""
    ids = sorted(set(vertex_ids))
    old_pos = [graph.position(v) for v in ids]
    keep_mask = 0
    for p in old_pos:
        keep_mask |= 1 << p
    newpos = {p: i for i, p in enumerate(old_pos)}
    adj = []
    for p in old_pos:
        mask = 0
        for q in _bit_positions(graph.adj[p] & keep_mask):
            mask |= 1 << newpos[q]
        adj.append(mask)
    orders = [graph.orders[p] for p in old_pos]
    return GroupGraph(graph.kind, ids, orders, adj, graph.group_ref)


def graph_to_json_dict(graph: GroupGraph) -> dict:
    return {
        "group": graph.group_ref,
        "kind": graph.kind,
        "vertices": [
            {"id": v, "order": o} for v, o in zip(graph.vertices, graph.orders)
        ],
        "edges": [list(e) for e in graph.edges()],
    }


def export_graph(graph: GroupGraph, format: str) -> str:
    """Deterministic DOT or JSON rendering."""
    if format == "json":
        return json.dumps(graph_to_json_dict(graph), separators=(",", ":"))
    if format == "dot":
        lines = ["graph {"]
        for v, o in zip(graph.vertices, graph.orders):
            lines.append(f'  g{v} [label="g{v}(o={o})"];')
        for a, b in graph.edges():
            lines.append(f"  g{a} -- g{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {format!r} (expected dot or json)")


def build_difference_graph(spec_or_group) -> GroupGraph | None:
    """Convenience: difference graph from a spec or an already-built group."""
    G = spec_or_group if isinstance(spec_or_group, FiniteGroup) else build_group(spec_or_group)
    return difference_graph(G)
