"""Reduced GF(2) homology and Euler-characteristic oracles.

Faces are bitmasks over the vertex set; the empty face is included, so all
Betti numbers are reduced.  Boundary ranks drive everything:

    b~_p = dim ker d_p - rank d_{p+1} = f_p - rank d_p - rank d_{p+1}.

Rank strategy per dimension: small matrices are row-reduced directly over
GF(2) with integer bitmask rows.  When a dimension pair is a complete
skeleton (all C(N, s) faces present, verified by counting), elimination is
run with cone pivots: columns containing the apex vertex pair bijectively
with the rows lacking it, and every remaining column is explicitly reduced
to zero against those pivots.  That keeps the N = 16 run well under the
time guard without trusting any closed form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb

from .cutcomplex import CutComplex, FVector, f_vector, hex_facet_count
from .errors import HexCutError, InvalidParams, SizeLimitExceeded

HOMOLOGY_VERTEX_LIMIT = 16
DENSE_ENTRY_LIMIT = 4_000_000


# ---------------------------------------------------------------------------
# face closure and boundary matrices
# ---------------------------------------------------------------------------

def faces_by_size(facet_masks, n_vertices: int) -> list[list[int]]:
    """Downward closure of the facet masks, grouped by face size.

    Returns ``levels`` with ``levels[s]`` the sorted size-s face masks;
    ``levels[0] == [0]`` is the empty face.
    """
    if not facet_masks:
        return []
    top = max(m.bit_count() for m in facet_masks)
    levels: list[set[int]] = [set() for _ in range(top + 1)]
    for m in facet_masks:
        levels[m.bit_count()].add(m)
    for s in range(top, 0, -1):
        lower = levels[s - 1]
        for f in levels[s]:
            x = f
            while x:
                b = x & -x
                lower.add(f ^ b)
                x ^= b
    return [sorted(level) for level in levels]


def gf2_rank(rows: list[int]) -> int:
    """Rank of a GF(2) matrix whose rows are integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row.bit_length() - 1
            if low in pivots:
                row ^= pivots[low]
            else:
                pivots[low] = row
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class BoundaryMatrixGF2:
    """Boundary from size-s faces (columns) to size-(s-1) faces (rows),
    with columns stored as integer bitmasks over the row ordinals."""

    size_pair: tuple[int, int]  # (s-1, s) as face sizes
    n_rows: int
    columns: tuple[int, ...]


def boundary_matrix(levels: list[list[int]], s: int) -> BoundaryMatrixGF2:
    row_index = {f: i for i, f in enumerate(levels[s - 1])}
    cols = []
    for f in levels[s]:
        col = 0
        x = f
        while x:
            b = x & -x
            col |= 1 << row_index[f ^ b]
            x ^= b
        cols.append(col)
    return BoundaryMatrixGF2((s - 1, s), len(levels[s - 1]), tuple(cols))


def _boundary_set(mask: int) -> set[int]:
    out = set()
    x = mask
    while x:
        b = x & -x
        out.add(mask ^ b)
        x ^= b
    return out


def _rank_complete_skeleton(levels: list[list[int]], s: int, n_vertices: int) -> int:
    """Boundary rank at a complete skeleton level, by cone-pivot elimination.

    Pivot columns are the size-s faces containing the apex (vertex 1): each
    holds the only nonzero entry in its row ``face ^ apex`` among apex-free
    rows, so they are independent.  Every apex-free column is then reduced
    against those pivots and must cancel to zero; the reduction is executed,
    not assumed.
    """
    apex = 1  # bit of vertex 1
    pivot_count = 0
    residual = []
    for f in levels[s]:
        if f & apex:
            pivot_count += 1
        else:
            residual.append(f)
    if pivot_count != comb(n_vertices - 1, s - 1):
        raise HexCutError("cone elimination invoked on an incomplete skeleton")
    for f in residual:
        acc: set[int] = set()
        x = f
        while x:
            b = x & -x
            face = f ^ b  # row of the original column
            acc ^= {face}
            acc ^= _boundary_set(face | apex)  # XOR the pivot column for that row
            x ^= b
        if acc:
            raise HexCutError("cone reduction left a nonzero residual")
    return pivot_count


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``values[i]`` is dimension ``i - 1``."""

    values: tuple[int, ...]

    def b(self, dim: int) -> int:
        i = dim + 1
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    @property
    def dim(self) -> int:
        return len(self.values) - 2


def betti_numbers_from_facets(
    facets,
    n_vertices: int,
    limit: int = HOMOLOGY_VERTEX_LIMIT,
    force: bool = False,
) -> BettiVector:
    """Reduced GF(2) Betti numbers of the complex generated by ``facets``."""
    N = n_vertices
    if N > limit and not force:
        raise SizeLimitExceeded(f"homology over 2^{N} faces exceeds limit {limit}")
    masks = [sum(1 << (v - 1) for v in f) for f in facets]
    if not masks:
        return BettiVector(())
    levels = faces_by_size(masks, N)
    top = len(levels) - 1
    f_counts = [len(level) for level in levels]
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        dom_full = f_counts[s] == comb(N, s)
        cod_full = f_counts[s - 1] == comb(N, s - 1)
        if dom_full and cod_full:
            ranks[s] = _rank_complete_skeleton(levels, s, N)
        else:
            if f_counts[s] * f_counts[s - 1] > DENSE_ENTRY_LIMIT and not force:
                raise SizeLimitExceeded(
                    f"dense elimination at {f_counts[s]}x{f_counts[s - 1]} exceeds guard"
                )
            ranks[s] = gf2_rank(list(boundary_matrix(levels, s).columns))
    values = tuple(
        f_counts[s] - ranks[s] - ranks[s + 1] for s in range(top + 1)
    )
    return BettiVector(values)


def betti_numbers(
    cx: CutComplex,
    limit: int = HOMOLOGY_VERTEX_LIMIT,
    force: bool = False,
) -> BettiVector:
    """Reduced GF(2) Betti numbers of a cut complex (facets = complements
    of the stored tuples)."""
    N = cx.n_vertices
    verts = set(range(1, N + 1))
    facets = [tuple(sorted(verts - set(c))) for c in cx.facets]
    return betti_numbers_from_facets(facets, N, limit=limit, force=force)


def boundary_composition_is_zero(
    facets, n_vertices: int, samples: int = 64, seed: int = 0
) -> bool:
    """Spot-check that applying the boundary twice annihilates random faces."""
    masks = [sum(1 << (v - 1) for v in f) for f in facets]
    if not masks:
        return True
    levels = faces_by_size(masks, n_vertices)
    pool = [f for level in levels[2:] for f in level]
    rng = random.Random(seed)
    take = pool if len(pool) <= samples else rng.sample(pool, samples)
    for f in take:
        acc: set[int] = set()
        for face in _boundary_set(f):
            acc ^= _boundary_set(face)
        if acc:
            return False
    return True


# ---------------------------------------------------------------------------
# Euler characteristics
# ---------------------------------------------------------------------------

def reduced_euler_from_fvector(fv: FVector) -> int:
    """Alternating sum over dimensions -1..dim of the face counts."""
    total = 0
    for i, count in enumerate(fv.counts):
        dim = i - 1
        total += count if dim % 2 == 0 else -count
    return total


def reduced_euler_closed(m: int, n: int) -> int:
    """Reduced Euler characteristic of the 3-cut complex of H(m, n) from the
    closed-form face counts: every subset of size at most N-4 is a face
    (girth 6 leaves no 4-subset without a disconnected triple) and the top
    dimension holds one face per facet.  Evaluated as the exact alternating
    binomial sum; no spanning-count input."""
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    N = 2 * m + 2 * n + 2 * m * n
    total = 0
    for size in range(0, N - 3):  # sizes 0..N-4, dimensions -1..N-5
        dim = size - 1
        term = comb(N, size)
        total += term if dim % 2 == 0 else -term
    top_dim = N - 4
    eta = hex_facet_count(m, n)
    total += eta if top_dim % 2 == 0 else -eta
    return total


def reduced_euler_exhaustive(cx: CutComplex, limit: int = 20, force: bool = False) -> int:
    return reduced_euler_from_fvector(f_vector(cx, mode="exhaustive", limit=limit, force=force))


# ---------------------------------------------------------------------------
# the aggregated wedge verdict
# ---------------------------------------------------------------------------

@dataclass
class WedgeVerdict:
    """Outcome of the independent checks that the complex is a wedge of
    spanning-count many top-dimensional spheres."""

    m: int
    n: int
    psi: int
    dimension: int
    checks: dict[str, dict]

    @property
    def all_ran_pass(self) -> bool:
        return all(c["pass"] for c in self.checks.values() if c["ran"])


def wedge_check(
    m: int,
    n: int,
    homology_limit: int = HOMOLOGY_VERTEX_LIMIT,
    pair_guard: int | None = None,
    force: bool = False,
    jobs: int = 1,
    strategy: str = "pairwise",
) -> WedgeVerdict:
    """Aggregate: (a) the candidate order verifies as a shelling, (b) the
    spanning count matches the closed form, (c) the reduced Euler
    characteristic matches it too, (d) GF(2) homology is concentrated in
    the top dimension with that value.  Skipped checks are reported, not
    failed."""
    from .cutcomplex import enumerate_facets
    from .hexgraph import build_hex_graph
    from .shelling import (
        PAIR_GUARD,
        shelling_order,
        spanning_count_formula,
        spanning_facets,
        verify_shelling,
    )

    guard = PAIR_GUARD if pair_guard is None else pair_guard
    g = build_hex_graph(m, n)
    N = g.n_vertices
    psi = spanning_count_formula(m, n)
    checks: dict[str, dict] = {}

    cx = enumerate_facets(g, 3)
    eta = cx.n_facets
    pairs = eta * (eta - 1) // 2
    order = None
    if pairs <= guard or force:
        order = shelling_order(cx)
        res = verify_shelling(order, strategy=strategy, jobs=jobs)
        checks["shelling"] = {"ran": True, "pass": res.ok,
                              "counterexample": res.counterexample}
    else:
        checks["shelling"] = {"ran": False, "pass": None,
                              "detail": f"{pairs} pairs exceed guard {guard}"}

    if order is not None and order.verified:
        report = spanning_facets(order)
        checks["spanning_eq_psi"] = {"ran": True, "pass": report.psi == psi,
                                     "computed": report.psi}
    else:
        checks["spanning_eq_psi"] = {"ran": False, "pass": None}

    euler = reduced_euler_closed(m, n)
    checks["euler_eq_psi"] = {"ran": True, "pass": euler == psi, "computed": euler}

    if N <= homology_limit:
        bv = betti_numbers(cx, limit=homology_limit)
        concentrated = bv.b(N - 4) == psi and all(
            bv.b(d) == 0 for d in range(-1, N - 4)
        )
        checks["betti"] = {"ran": True, "pass": concentrated,
                           "top": bv.b(N - 4)}
    else:
        checks["betti"] = {"ran": False, "pass": None,
                           "detail": f"N={N} exceeds homology limit {homology_limit}"}

    return WedgeVerdict(m=m, n=n, psi=psi, dimension=N - 4, checks=checks)


def wedge_verdict_to_json_dict(v: WedgeVerdict) -> dict:
    return {
        "m": v.m,
        "n": v.n,
        "checks": {
            name: {k: val for k, val in c.items()}
            for name, c in v.checks.items()
        },
        "psi": v.psi,
        "dimension": v.dimension,
    }


__all__ = [
    "BettiVector",
    "BoundaryMatrixGF2",
    "HOMOLOGY_VERTEX_LIMIT",
    "betti_numbers",
    "betti_numbers_from_facets",
    "boundary_composition_is_zero",
    "boundary_matrix",
    "faces_by_size",
    "gf2_rank",
    "reduced_euler_closed",
    "reduced_euler_exhaustive",
    "reduced_euler_from_fvector",
    "wedge_check",
    "wedge_verdict_to_json_dict",
    "WedgeVerdict",
]
