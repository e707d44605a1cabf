"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own machinery: they
re-derive connectivity, facet enumeration, the shelling condition and the
spanning condition from first principles on full vertex sets, so that the
complement-arithmetic implementation is checked against an unrelated code
path.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from types import SimpleNamespace

import pytest

from hexcut import (
    build_hex_graph,
    enumerate_facets,
    shelling_order,
    spanning_facets,
    verify_shelling,
)


# ---------------------------------------------------------------------------
# oracles (independent code paths)
# ---------------------------------------------------------------------------

def oracle_adjacency(g) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.n_vertices + 1)}
    for u, v in g.edges():
        adj[u].add(v)
        adj[v].add(u)
    return adj


def oracle_connected(adj: dict[int, set[int]], subset) -> bool:
    s = set(subset)
    start = next(iter(s))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w in s and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(s)


def oracle_facet_complements(g, k: int) -> list[tuple[int, ...]]:
    """Disconnected k-subsets by BFS, no adjacency special cases."""
    adj = oracle_adjacency(g)
    return [
        t
        for t in combinations(range(1, g.n_vertices + 1), k)
        if not oracle_connected(adj, t)
    ]


def oracle_full_facets(g, k: int) -> list[frozenset[int]]:
    verts = set(range(1, g.n_vertices + 1))
    return [verts - set(t) for t in oracle_facet_complements(g, k)]


def oracle_swap_map(facet_sets: list[frozenset[int]]) -> list[dict[int, int]]:
    """For each position j, map each vertex x of F_j to the earliest r < j
    with F_r meeting F_j in exactly F_j minus x.  Set intersections only."""
    out = []
    for j, fj in enumerate(facet_sets):
        reach: dict[int, int] = {}
        for r in range(j):
            inter = facet_sets[r] & fj
            if len(inter) == len(fj) - 1:
                (x,) = fj - inter
                reach.setdefault(x, r)
        out.append(reach)
    return out


def oracle_is_shelling(facet_sets: list[frozenset[int]]):
    """Direct check of the single-swap condition over every pair, on full
    vertex sets.  Returns (ok, first failing 1-based (i, j))."""
    swap = oracle_swap_map(facet_sets)
    for j in range(1, len(facet_sets)):
        fj = facet_sets[j]
        for i in range(j):
            if not any(x in swap[j] for x in fj - facet_sets[i]):
                return False, (i + 1, j + 1)
    return True, None


def oracle_spanning_flags(facet_sets: list[frozenset[int]]) -> list[bool]:
    swap = oracle_swap_map(facet_sets)
    return [set(swap[j]) == set(facet_sets[j]) for j in range(len(facet_sets))]


def oracle_face_counts(facet_sets: list[frozenset[int]], n_vertices: int) -> list[int]:
    """Exhaustive face counts by size, testing containment in some facet."""
    masks = [sum(1 << (v - 1) for v in f) for f in facet_sets]
    counts = [0] * (max((len(f) for f in facet_sets), default=0) + 1)
    for mask in range(1 << n_vertices):
        if any(mask & ~fm == 0 for fm in masks):
            counts[bin(mask).count("1")] += 1
    return counts


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def instance():
    """Factory: cached graph/complex/verified order bundles per (m, n)."""
    cache: dict[tuple[int, int], SimpleNamespace] = {}

    def get(m: int, n: int, verify: bool = True) -> SimpleNamespace:
        key = (m, n)
        if key not in cache:
            g = build_hex_graph(m, n)
            cx = enumerate_facets(g, 3)
            order = shelling_order(cx)
            bundle = SimpleNamespace(g=g, cx=cx, order=order, verify=None, report=None)
            cache[key] = bundle
        bundle = cache[key]
        if verify and bundle.verify is None:
            bundle.verify = verify_shelling(bundle.order)
            bundle.report = spanning_facets(bundle.order)
        return bundle

    return get
