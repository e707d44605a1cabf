"""Cut complexes of graphs.

The k-cut complex of a graph G has one facet per k-subset of V(G) whose
induced subgraph is disconnected; the facet is the complement of that
subset.  Facets are stored and indexed only by their complement tuples,
sorted ascending; all set algebra downstream happens in complement
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import InvalidParams, KOutOfRange, SizeLimitExceeded, VertexOutOfRange
from .hexgraph import Graph, HexGraph

EXHAUSTIVE_VERTEX_LIMIT = 20


def induced_p3_count(m: int, n: int) -> int:
    """Number of connected 3-subsets of H(m, n): 6mn + 2m + 2n - 4."""
    _check_params(m, n)
    return 6 * m * n + 2 * m + 2 * n - 4


def hex_facet_count(m: int, n: int) -> int:
    """Number of facets of the 3-cut complex of H(m, n): C(N, 3) minus the
    connected triples."""
    _check_params(m, n)
    N = 2 * m + 2 * n + 2 * m * n
    return comb(N, 3) - induced_p3_count(m, n)


def _check_params(m: int, n: int) -> None:
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")


def _subset_disconnected(g: Graph, subset: tuple[int, ...]) -> bool:
    """Direct connectivity test on a small vertex tuple.

    Sizes up to 4 are decided by adjacency checks alone; larger sets fall
    back to search.
    """
    k = len(subset)
    if k == 1:
        return False
    if k == 2:
        return not g.is_edge(subset[0], subset[1])
    if k == 3:
        a, b, c = subset
        e = int(g.is_edge(a, b)) + int(g.is_edge(a, c)) + int(g.is_edge(b, c))
        return e < 2
    if k == 4:
        # grow a component from the first vertex via adjacency bits
        reach = 1
        frontier = 1
        adj = [
            sum(
                1 << j
                for j in range(4)
                if j != i and g.is_edge(subset[i], subset[j])
            )
            for i in range(4)
        ]
        while frontier:
            nxt = 0
            for i in range(4):
                if frontier >> i & 1:
                    nxt |= adj[i]
            frontier = nxt & ~reach
            reach |= nxt
        return reach != 0b1111
    return not g.is_connected_subset(subset)


@dataclass
class CutComplex:
    """A k-cut complex: graph, k, and the sorted facet complement list."""

    graph: Graph
    k: int
    facets: tuple[tuple[int, ...], ...]
    facet_index: dict[tuple[int, ...], int] = field(repr=False)

    @property
    def n_vertices(self) -> int:
        return self.graph.n_vertices

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def dim(self) -> int:
        """Dimension of the facets (each has N - k vertices)."""
        return self.n_vertices - self.k - 1


def enumerate_facets(g: Graph, k: int) -> CutComplex:
    """Test every k-subset for induced disconnectedness; the disconnected
    ones become facet complements, listed in ascending lexicographic order."""
    N = g.n_vertices
    if not 1 <= k <= N - 1:
        raise KOutOfRange(f"k={k} outside [1,{N - 1}]")
    facets = tuple(
        t
        for t in combinations(range(1, N + 1), k)
        if _subset_disconnected(g, t)
    )
    index = {t: i for i, t in enumerate(facets)}
    return CutComplex(graph=g, k=k, facets=facets, facet_index=index)


def is_face(cx: CutComplex, sigma) -> bool:
    """True iff sigma is contained in some facet, i.e. the complement of
    sigma contains a k-subset inducing a disconnected subgraph.

    Runs without facet scans: searches k-subsets of the complement with
    early exit.
    """
    g = cx.graph
    N = g.n_vertices
    s = set(sigma)
    for v in s:
        if not (1 <= v <= N):
            raise VertexOutOfRange(f"vertex {v} outside [1,{N}]")
    rest = [v for v in range(1, N + 1) if v not in s]
    if len(rest) < cx.k:
        return False
    return any(
        _subset_disconnected(g, t) for t in combinations(rest, cx.k)
    )


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension; ``counts[i]`` is the number of faces of
    dimension ``i - 1`` (index 0 holds the empty face)."""

    counts: tuple[int, ...]

    def f(self, dim: int) -> int:
        i = dim + 1
        if 0 <= i < len(self.counts):
            return self.counts[i]
        return 0

    @property
    def dim(self) -> int:
        return len(self.counts) - 2


def f_vector(
    cx: CutComplex,
    mode: str = "auto",
    limit: int = EXHAUSTIVE_VERTEX_LIMIT,
    force: bool = False,
) -> FVector:
    """Face counts of the complex.

    ``exhaustive`` counts is_face over all 2^N subsets (guarded by
    ``limit`` unless ``force``).  ``closed`` applies to the hexagonal
    family with k = 3 only: girth 6 rules out 4-cycles, so every 4-subset
    of V contains a disconnected triple, hence every subset of size at
    most N-4 is a face and f_{j-1} = C(N, j) for j <= N-4, with the top
    count equal to the number of facets.  ``auto`` picks closed when it
    applies, else exhaustive.
    """
    if mode not in ("auto", "exhaustive", "closed"):
        raise InvalidParams(f"unknown f-vector mode {mode!r}")
    closed_applies = isinstance(cx.graph, HexGraph) and cx.k == 3
    if mode == "closed" and not closed_applies:
        raise InvalidParams("closed form requires the hexagonal family with k=3")
    if mode == "auto":
        mode = "closed" if closed_applies else "exhaustive"

    N = cx.n_vertices
    if mode == "closed":
        counts = [comb(N, j) for j in range(N - 2)]  # face sizes 0..N-3
        counts[N - 3] = cx.n_facets
        return FVector(tuple(counts))

    if N > limit and not force:
        raise SizeLimitExceeded(
            f"exhaustive f-vector over 2^{N} subsets exceeds limit {limit}"
        )
    if cx.n_facets == 0:
        return FVector((0,))
    counts = [0] * (N - cx.k + 1)
    verts = list(range(1, N + 1))
    for mask in range(1 << N):
        sigma = [verts[i] for i in range(N) if mask >> i & 1]
        if len(sigma) <= N - cx.k and is_face(cx, sigma):
            counts[len(sigma)] += 1
    return FVector(tuple(counts))


def facets_to_json_dict(cx: CutComplex) -> dict:
    return {
        "k": cx.k,
        "n_vertices": cx.n_vertices,
        "facet_complements": [list(t) for t in cx.facets],
    }


def facets_to_csv(cx: CutComplex) -> str:
    lines = [",".join(str(v) for v in t) for t in cx.facets]
    return "\n".join(lines) + "\n"
