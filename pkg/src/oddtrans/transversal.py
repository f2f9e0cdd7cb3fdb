"""Odd-transversal structure over GF(2).

An odd transversal is a vertex set meeting every edge in an odd number of
vertices.  Existence, counting, and the minimal-non-odd-transversal
classification all reduce to the incidence matrix over GF(2): a hypergraph
has an odd transversal iff ``B x = 1`` is solvable, and a connected
hypergraph is minimal non-odd-transversal iff its edge count is odd, every
vertex degree is even, and the incidence rank is ``m - 1``.

A brute-force enumerator over all vertex subsets is kept alongside as an
independent oracle for small instances, plus the combinatorial companion
checks: edge injections into vertices and the edge-union size bound.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from . import gf2
from .gf2 import BitVector
from .hypergraph import Hypergraph

BRUTE_FORCE_MAX_VERTICES = 24
DEFINITIONAL_CHECK_MAX_EDGES = 64


@dataclass(frozen=True)
class ClassificationReport:
    """Everything the rank criterion says about one hypergraph."""

    is_odd_transversal: bool
    witness: tuple[int, ...] | None
    count: int
    m_odd: bool
    all_degrees_even: bool
    rank: int
    connected: bool
    is_minimal: bool
    minimality_method: str
    definitional_minimal: bool | None = None


@dataclass(frozen=True)
class EdgeInjection:
    """An injective choice of one vertex from each edge."""

    assignment: dict[int, int]


def _meets_all_edges_oddly(edge_masks: tuple[int, ...], subset_mask: int) -> bool:
    return all((mask & subset_mask).bit_count() & 1 for mask in edge_masks)


def find_odd_transversal(hg: Hypergraph) -> tuple[int, ...] | None:
    """An odd transversal from the GF(2) solve, or None when none exists.

    Free variables are set to zero, so the witness is deterministic.  The
    witness is re-verified against every edge before it is returned.
    """
    x = gf2.solve(hg.incidence(), BitVector.ones(hg.m))
    if x is None:
        return None
    if not _meets_all_edges_oddly(hg.edge_masks(), x.bits):  # pragma: no cover
        raise AssertionError("solver witness fails the odd-intersection check")
    return x.support()


def brute_force_odd_transversal(hg: Hypergraph) -> tuple[int, ...] | None:
    """Exhaustive scan over all non-empty vertex subsets.

    Independent of the GF(2) route on purpose; subsets are visited in
    ascending bit-mask order (vertex ``i`` is bit ``i``), so the result is
    deterministic.  Guarded to ``n <= 24``.
    """
    if hg.n > BRUTE_FORCE_MAX_VERTICES:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_MAX_VERTICES} vertices")
    masks = hg.edge_masks()
    for subset in range(1, 1 << hg.n):
        if _meets_all_edges_oddly(masks, subset):
            return tuple(v for v in range(hg.n) if (subset >> v) & 1)
    return None


def count_odd_transversals(hg: Hypergraph) -> int:
    """Exact number of odd transversals, as an arbitrary-precision integer."""
    return gf2.solution_count(hg.incidence(), BitVector.ones(hg.m))


def classify(hg: Hypergraph, definitional: bool | None = None) -> ClassificationReport:
    """Classify a hypergraph against the minimal-non-odd-transversal criteria.

    Never raises on disconnected input: disconnection alone already rules
    out minimality and the report simply records it.  When ``definitional``
    is true (default: auto, for ``m <= 64``) the single-edge-deletion
    definition is evaluated as well -- one GF(2) solve per edge -- and the
    agreement is recorded in ``minimality_method``.
    """
    inc = hg.incidence()
    rank = gf2.rank(inc)
    x = gf2.solve(inc, BitVector.ones(hg.m))
    witness = x.support() if x is not None else None
    count = (1 << (hg.n - rank)) if x is not None else 0
    m_odd = hg.m % 2 == 1
    all_even = all(d % 2 == 0 for d in hg.degrees())
    connected = hg.is_connected()
    is_minimal = connected and m_odd and all_even and rank == hg.m - 1

    if definitional is None:
        definitional = hg.m <= DEFINITIONAL_CHECK_MAX_EDGES
    definitional_minimal: bool | None = None
    method = "rank-criterion"
    if definitional:
        definitional_minimal = x is None and all(
            find_odd_transversal(hg.delete_edge(i)) is not None for i in range(hg.m)
        )
        # For connected inputs the two verdicts provably coincide; a
        # mismatch would mean a defect in the solver or rank computation.
        assert definitional_minimal == is_minimal or not connected
        method = "both-agree" if definitional_minimal == is_minimal else "definitional"

    return ClassificationReport(
        is_odd_transversal=x is not None,
        witness=witness,
        count=count,
        m_odd=m_odd,
        all_degrees_even=all_even,
        rank=rank,
        connected=connected,
        is_minimal=is_minimal,
        minimality_method=method,
        definitional_minimal=definitional_minimal,
    )


def minimal_subset_certificate(hg: Hypergraph) -> tuple[int, ...] | None:
    """A non-empty proper edge set whose indicator rows sum to zero, if any.

    Such a set certifies that the hypergraph is not minimal (a proper
    dependent edge subset exists).  Row dependencies are the nullspace of
    the transposed incidence matrix, so no enumeration is needed: any basis
    vector with support different from the full edge set qualifies, and
    when the only dependency is the all-edges one, no certificate exists.
    """
    basis = gf2.nullspace_basis(gf2.transpose(hg.incidence()))
    full = (1 << hg.m) - 1
    for vec in basis:
        if vec.bits != full:
            return vec.support()
    return None


def _hopcroft_karp(adjacency: list[list[int]], n_right: int) -> dict[int, int]:
    """Maximum bipartite matching; returns {left index: right index}."""
    inf = float("inf")
    n_left = len(adjacency)
    match_left: list[int | None] = [None] * n_left
    match_right: list[int | None] = [None] * n_right
    dist: list[float] = [0.0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_left[u] is None:
                dist[u] = 0.0
                queue.append(u)
            else:
                dist[u] = inf
        found = False
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                w = match_right[v]
                if w is None:
                    found = True
                elif dist[w] == inf:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adjacency[u]:
            w = match_right[v]
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = inf
        return False

    while bfs():
        for u in range(n_left):
            if match_left[u] is None:
                dfs(u)
    return {u: v for u, v in enumerate(match_left) if v is not None}


def edge_injection(hg: Hypergraph) -> EdgeInjection | None:
    """An injection of edges into vertices with each edge mapped inside itself.

    Computed as a maximum matching of the incidence bipartite graph; absent
    when the matching cannot saturate the edge side.
    """
    matching = _hopcroft_karp([list(e) for e in hg.edges], hg.n)
    if len(matching) != hg.m:
        return None
    assert len(set(matching.values())) == hg.m
    assert all(v in hg.edges[e] for e, v in matching.items())
    return EdgeInjection(matching)


def intersection_bound_check(hg: Hypergraph, max_t: int) -> tuple[int, ...] | None:
    """Search for ``t <= max_t`` edges whose union has at most ``t`` vertices.

    Returns the offending edge-index set, or None when every subset up to
    ``max_t`` covers at least one vertex more than its size.  Enumeration is
    exponential in ``max_t``, hence the explicit cap.
    """
    if not 1 <= max_t <= hg.m - 1:
        raise ValueError(f"max_t must be in [1, m-1]; got {max_t} with m={hg.m}")
    masks = hg.edge_masks()
    for t in range(1, max_t + 1):
        for combo in itertools.combinations(range(hg.m), t):
            union = 0
            for i in combo:
                union |= masks[i]
            if union.bit_count() <= t:
                return combo
    return None
