"""Exact domination: testing, minimum sets, and bounded enumeration.

The search is iterative deepening on the set size with a fixed branching
order (uncovered vertex of minimum degree; candidates are its closed
neighborhood in ascending index order), so the returned witness is
reproducible across runs and kernel backends.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import BudgetExceededError, EmptyGraphError, TooLargeError, VertexError
from .graphs import GroupGraph

ENUMERATION_GAMMA_LIMIT = 3
ENUMERATION_VERTEX_LIMIT = 64


@dataclass
class DominationResult:
    gamma: int
    witness: list[int]  # element ids, sorted
    exhaustive: bool
    all_min_sets: list[list[int]] | None = None

    def to_json_dict(self) -> dict:
        out = {
            "gamma": self.gamma,
            "witness": self.witness,
            "exhaustive": self.exhaustive,
        }
        if self.all_min_sets is not None:
            out["all_min_sets"] = self.all_min_sets
        return out


def _closed_neighborhoods(graph: GroupGraph) -> list[int]:
    return [mask | (1 << i) for i, mask in enumerate(graph.adj)]


def is_dominating(graph: GroupGraph, vertex_ids) -> bool:
    """Closed-neighborhood cover test; raises VertexError off the graph."""
    positions = [graph.position(v) for v in vertex_ids]
    closed = _closed_neighborhoods(graph)
    covered = 0
    for p in positions:
        covered |= closed[p]
    return covered == (1 << graph.num_vertices) - 1


def min_dominating_set(graph: GroupGraph, budget: int | None = None) -> DominationResult:
    """Exact domination number with one deterministic witness.

    With a budget, raises BudgetExceededError (carrying the proven lower
    bound budget + 1) when no dominating set of size <= budget exists.
    """
    n = graph.num_vertices
    if n == 0:
        raise EmptyGraphError("domination of an empty graph")
    closed = _closed_neighborhoods(graph)
    limit = n if budget is None else min(budget, n)
    for k in range(1, limit + 1):
        positions = _kernels.find_dominating_set(closed, n, k)
        if positions is not None:
            witness = sorted(graph.vertices[p] for p in positions)
            return DominationResult(gamma=len(positions), witness=witness, exhaustive=False)
    # the full vertex set always dominates, so this is only reachable with a budget
    raise BudgetExceededError(budget=limit, lower_bound=limit + 1)


def enumerate_min_dominating_sets(graph: GroupGraph) -> DominationResult:
    """All minimum dominating sets; refuses with TooLargeError unless
    gamma <= 3 or the vertex count is <= 64."""
    base = min_dominating_set(graph)
    if base.gamma > ENUMERATION_GAMMA_LIMIT and graph.num_vertices > ENUMERATION_VERTEX_LIMIT:
        raise TooLargeError(
            f"refusing exhaustive enumeration: gamma={base.gamma} on "
            f"{graph.num_vertices} vertices"
        )
    closed = _closed_neighborhoods(graph)
    sets = _kernels.enumerate_dominating_sets(closed, graph.num_vertices, base.gamma)
    all_sets = sorted(sorted(graph.vertices[p] for p in s) for s in sets)
    return DominationResult(
        gamma=base.gamma,
        witness=base.witness,
        exhaustive=True,
        all_min_sets=all_sets,
    )


def has_dominating_vertex(graph: GroupGraph) -> tuple[bool, list[int]]:
    """Cheap gamma == 1 test: all vertices whose closed neighborhood covers
    the graph, as element ids."""
    full = (1 << graph.num_vertices) - 1
    singles = [
        graph.vertices[i]
        for i, mask in enumerate(graph.adj)
        if mask | (1 << i) == full
    ]
    return bool(singles), singles
