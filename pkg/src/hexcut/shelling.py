"""Facet orders on 3-cut complexes of hexagonal grids and their verification.

The candidate shelling order sorts facets by ascending lexicographic order
of their complement triples, then relocates the tail facets (facets whose
complement is the open neighborhood of a degree-3 center in the lower
color class, per the arithmetic schedule below) to the end.

Verification runs entirely in complement arithmetic: with facet
complements of size 3, an earlier facet F_r meets F_j in all but one
vertex exactly when F_r's complement is F_j's complement with one entry
swapped.  For each position j the swap set

    Lambda_j = { v not in F_j^c : some single entry of F_j^c can be
                 replaced by v to give an earlier facet complement }

decides everything: the order is a shelling iff every earlier complement
meets Lambda_j, and the facet at j is spanning iff Lambda_j covers all of
F_j (|Lambda_j| = N - 3).
"""

from __future__ import annotations

import os
from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .cutcomplex import CutComplex
from .errors import (
    IncompleteOrder,
    InvalidParams,
    NoTailFacets,
    OrdinalOutOfRange,
    ResourceGuard,
    TailFacetInvariantViolated,
    TailFacetNotFound,
    UnverifiedOrder,
    WitnessFailure,
)
from .hexgraph import Graph, HexGraph

PAIR_GUARD = 100_000_000
DENSE_TABLE_MAX_VERTICES = 130


# ---------------------------------------------------------------------------
# tail facets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TailFacet:
    """A facet whose complement is the open neighborhood of its center."""

    index: int  # 1-based position in the tail schedule
    complement: tuple[int, int, int]
    center: int


def tail_facet_count(m: int, n: int) -> int:
    """Number of relocated tail facets: mn - 2 for m >= 2, n - 1 for m = 1."""
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    return m * n - 2 if m >= 2 else n - 1


def tail_facets(m: int, n: int, graph: HexGraph | None = None) -> list[TailFacet]:
    """The tail facet schedule, strictly increasing in complement-lex order.

    Two ranges of centers: for each row k = 1..n-1 the band of m centers
    i+m+(k-1) with (k-1)m < i <= km, then the m-2 top-row centers i+m+n
    with (n-1)m < i <= nm-2.  When a graph is supplied, every complement
    is checked to equal the open neighborhood of its center.
    """
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    h = m + n + m * n
    out: list[TailFacet] = []
    for k in range(1, n):
        for i in range((k - 1) * m + 1, k * m + 1):
            comp = (i + h + (k - 1), i + m + h + k, i + m + h + k + 1)
            out.append(TailFacet(len(out) + 1, comp, i + m + (k - 1)))
    for i in range((n - 1) * m + 1, n * m - 1):
        comp = (
            i + m + 2 * n + m * n,
            i + 2 * m + 2 * n + m * n,
            i + 2 * m + 2 * n + m * n + 1,
        )
        out.append(TailFacet(len(out) + 1, comp, i + m + n))

    if len(out) != tail_facet_count(m, n):
        raise TailFacetInvariantViolated(
            f"built {len(out)} tail facets, expected {tail_facet_count(m, n)}"
        )
    for prev, cur in zip(out, out[1:]):
        if not prev.complement < cur.complement:
            raise TailFacetInvariantViolated("tail schedule not complement-lex increasing")
    if graph is not None:
        for t in out:
            x1, x2, x3 = t.complement
            if graph.neighbors(t.center) != t.complement:
                raise TailFacetInvariantViolated(
                    f"tail facet {t.index}: complement {t.complement} is not the "
                    f"neighborhood {graph.neighbors(t.center)} of center {t.center}"
                )
            if not (t.center <= graph.v1_boundary and x1 > graph.v1_boundary):
                raise TailFacetInvariantViolated(
                    f"tail facet {t.index}: center/complement on wrong sides of the split"
                )
            if x3 != x2 + 1:
                raise TailFacetInvariantViolated(
                    f"tail facet {t.index}: top two complement entries not consecutive"
                )
    return out


# ---------------------------------------------------------------------------
# orders
# ---------------------------------------------------------------------------

@dataclass
class ShellingOrder:
    """A linear order on the facets of a cut complex.

    ``facets`` lists complement tuples in order; ``position`` maps each
    complement to its 1-based ordinal.  The tail schedule, when relocated,
    occupies the last ``len(tail)`` positions in tail-index order.
    """

    cx: CutComplex
    facets: tuple[tuple[int, ...], ...]
    position: dict[tuple[int, ...], int] = field(repr=False)
    tail: tuple[TailFacet, ...] = ()
    base_count: int = 0
    verified: bool = False

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    @property
    def n_vertices(self) -> int:
        return self.cx.n_vertices


def _make_order(cx: CutComplex, seq: list[tuple[int, ...]], tail, base_count) -> ShellingOrder:
    position = {t: i + 1 for i, t in enumerate(seq)}
    return ShellingOrder(
        cx=cx,
        facets=tuple(seq),
        position=position,
        tail=tuple(tail),
        base_count=base_count,
    )


def _require_hex3(cx: CutComplex) -> HexGraph:
    if not isinstance(cx.graph, HexGraph) or cx.k != 3:
        raise InvalidParams("this order is defined for the hexagonal family with k=3")
    return cx.graph


def shelling_order(cx: CutComplex, relocate_tail: bool = True) -> ShellingOrder:
    """The candidate shelling order of the 3-cut complex of H(m, n).

    Base segment: complements ascending lexicographically.  With
    ``relocate_tail`` the tail facets are removed and appended at the end
    in schedule order; without it the plain sorted order is returned.
    """
    g = _require_hex3(cx)
    base = sorted(cx.facets)
    tail = tail_facets(g.m, g.n, g)
    for t in tail:
        if t.complement not in cx.facet_index:
            raise TailFacetNotFound(
                f"tail facet {t.index} complement {t.complement} not among facets"
            )
    if not relocate_tail:
        return _make_order(cx, base, (), len(base))
    tset = {t.complement for t in tail}
    seq = [f for f in base if f not in tset]
    base_count = len(seq)
    seq.extend(t.complement for t in tail)
    return _make_order(cx, seq, tail, base_count)


def order_with_tail_reinserted(cx: CutComplex, tail_index: int) -> tuple[ShellingOrder, int]:
    """Relocated order with the single tail facet ``tail_index`` moved back
    to its sorted position among the base facets.

    Returns the order and the 1-based position where the facet was
    reinserted (the position at which verification must fail).
    """
    g = _require_hex3(cx)
    tail = tail_facets(g.m, g.n, g)
    if not 1 <= tail_index <= len(tail):
        raise OrdinalOutOfRange(f"tail index {tail_index} outside [1,{len(tail)}]")
    chosen = tail[tail_index - 1]
    tset = {t.complement for t in tail}
    seq = [f for f in sorted(cx.facets) if f not in tset]
    spot = bisect_left(seq, chosen.complement)
    seq.insert(spot, chosen.complement)
    rest = [t for t in tail if t.index != tail_index]
    seq.extend(t.complement for t in rest)
    order = _make_order(cx, seq, rest, len(seq) - len(rest))
    return order, spot + 1


# ---------------------------------------------------------------------------
# swap sets (Lambda_j)
# ---------------------------------------------------------------------------

def _check_cover(order: ShellingOrder) -> None:
    if len(order.facets) != order.cx.n_facets or set(order.facets) != set(order.cx.facets):
        raise IncompleteOrder("order does not cover the facets exactly once")


def swap_set(order: ShellingOrder, j: int) -> frozenset[int]:
    """Lambda_j for the 1-based position j, via 3(N-3) position lookups."""
    if not 1 <= j <= order.n_facets:
        raise OrdinalOutOfRange(f"position {j} outside [1,{order.n_facets}]")
    compl = order.facets[j - 1]
    cset = set(compl)
    pos = order.position
    out = set()
    for lam in range(1, order.n_vertices + 1):
        if lam in cset:
            continue
        for a in compl:
            cand = tuple(sorted((cset - {a}) | {lam}))
            p = pos.get(cand)
            if p is not None and p < j:
                out.add(lam)
                break
    return frozenset(out)


def _dense_position_table(order: ShellingOrder) -> np.ndarray | None:
    """Packed complement -> 0-based position lookup, or None when N is too big."""
    N = order.n_vertices
    if N > DENSE_TABLE_MAX_VERTICES:
        return None
    K = N + 1
    table = np.full(K * K * K, -1, dtype=np.int64)
    comp = np.asarray(order.facets, dtype=np.int64)
    keys = (comp[:, 0] * K + comp[:, 1]) * K + comp[:, 2]
    table[keys] = np.arange(len(order.facets))
    return table


def _swap_table(order: ShellingOrder) -> np.ndarray:
    """Boolean table L with L[j, v] true iff v lies in Lambda_{j+1}.

    Column 0 is unused.  Requires k = 3 and a dense position table.
    """
    N = order.n_vertices
    K = N + 1
    pos = _dense_position_table(order)
    if pos is None:
        raise InvalidParams(f"dense swap table limited to N <= {DENSE_TABLE_MAX_VERTICES}")
    comp = np.asarray(order.facets, dtype=np.int64)
    eta = len(comp)
    table = np.zeros((eta, N + 1), dtype=bool)
    lam = np.arange(1, N + 1, dtype=np.int64)
    ordinals = np.arange(eta, dtype=np.int64)[:, None]
    for slot in range(3):
        keep = [c for c in range(3) if c != slot]
        u = comp[:, keep[0]][:, None]
        v = comp[:, keep[1]][:, None]
        key = np.where(
            lam < u,
            (lam * K + u) * K + v,
            np.where(lam < v, (u * K + lam) * K + v, (u * K + v) * K + lam),
        )
        p = pos[key]
        table[:, 1:] |= (p >= 0) & (p < ordinals)
    return table


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    counterexample: tuple[int, int] | None  # 1-based (i, j), minimal in (j, i)
    pairs_checked: int
    strategy: str
    jobs: int


_WORKER: dict = {}


def _scan_range(swaps, A, B, C, lo, hi, chunk=256):
    """First failing (i, j) with lo <= j < hi (0-based), else None."""
    for start in range(lo, hi, chunk):
        stop = min(start + chunk, hi)
        block = swaps[start:stop]
        ok = block[:, A[:stop]] | block[:, B[:stop]] | block[:, C[:stop]]
        ok |= np.arange(stop)[None, :] >= np.arange(start, stop)[:, None]
        if not ok.all():
            j_rel, i0 = np.argwhere(~ok)[0]
            return int(i0), start + int(j_rel)
    return None


def _pairwise_worker(bounds):
    lo, hi = bounds
    w = _WORKER
    return _scan_range(w["swaps"], w["A"], w["B"], w["C"], lo, hi)


def _job_bounds(eta: int, jobs: int) -> list[tuple[int, int]]:
    """Split [1, eta) so each range carries roughly equal pair work (~ j)."""
    cuts = [1] + [max(1, round(eta * (k / jobs) ** 0.5)) for k in range(1, jobs)] + [eta]
    cuts = sorted(set(min(c, eta) for c in cuts))
    return [(lo, hi) for lo, hi in zip(cuts, cuts[1:]) if lo < hi]


def _verify_k3(order: ShellingOrder, strategy: str, jobs: int) -> VerifyResult:
    swaps = _swap_table(order)
    comp = np.asarray(order.facets, dtype=np.int64)
    A = np.ascontiguousarray(comp[:, 0])
    B = np.ascontiguousarray(comp[:, 1])
    C = np.ascontiguousarray(comp[:, 2])
    eta = len(comp)
    N = order.n_vertices

    found: tuple[int, int] | None = None
    if strategy == "pairwise":
        if jobs > 1 and eta > 2048 and hasattr(os, "fork"):
            import multiprocessing as mp

            _WORKER.update({"swaps": swaps, "A": A, "B": B, "C": C})
            try:
                with mp.get_context("fork").Pool(jobs) as pool:
                    results = pool.map(_pairwise_worker, _job_bounds(eta, jobs))
            finally:
                _WORKER.clear()
            hits = [r for r in results if r is not None]
            found = min(hits, key=lambda t: (t[1], t[0])) if hits else None
        else:
            found = _scan_range(swaps, A, B, C, 1, eta)
    else:  # lambda-complement
        rowfill = swaps[:, 1:].sum(axis=1)
        index = order.position
        for j in range(1, eta):
            if rowfill[j] == N - 3:
                continue  # Lambda_j = F_j, every earlier complement meets it
            support = np.flatnonzero(~swaps[j])
            support = support[support >= 1]  # vertices outside Lambda_j
            n_cand = comb(len(support), 3)
            if n_cand >= j:
                row = swaps[j]
                ok = row[A[:j]] | row[B[:j]] | row[C[:j]]
                if not ok.all():
                    found = (int(np.argmin(ok)), j)
                    break
            else:
                best = None
                for cand in combinations(support.tolist(), 3):
                    p = index.get(cand)
                    if p is not None and p - 1 < j and (best is None or p - 1 < best):
                        best = p - 1
                if best is not None:
                    found = (best, j)
                    break

    if found is None:
        pairs = eta * (eta - 1) // 2
        return VerifyResult(True, None, pairs, strategy, jobs)
    i0, j0 = found
    pairs = j0 * (j0 + 1) // 2  # through position j0+1 (1-based), deterministic
    return VerifyResult(False, (i0 + 1, j0 + 1), pairs, strategy, jobs)


def _verify_generic(order: ShellingOrder, strategy: str) -> VerifyResult:
    """Reference implementation for any k, pure python."""
    facets = order.facets
    eta = len(facets)
    N = order.n_vertices
    k = order.cx.k
    index = {t: i for i, t in enumerate(facets)}

    found = None
    for j in range(1, eta):
        cset = set(facets[j])
        lam_set = set()
        for lam in range(1, N + 1):
            if lam in cset:
                continue
            for a in facets[j]:
                cand = tuple(sorted((cset - {a}) | {lam}))
                p = index.get(cand)
                if p is not None and p < j:
                    lam_set.add(lam)
                    break
        if strategy == "lambda-complement" and len(lam_set) == N - k:
            continue
        support = [v for v in range(1, N + 1) if v not in lam_set]
        use_candidates = strategy == "lambda-complement" and comb(len(support), k) < j
        if use_candidates:
            best = None
            for cand in combinations(support, k):
                p = index.get(cand)
                if p is not None and p < j and (best is None or p < best):
                    best = p
            if best is not None:
                found = (best, j)
                break
        else:
            hit = None
            for i in range(j):
                if not set(facets[i]) & lam_set:
                    hit = i
                    break
            if hit is not None:
                found = (hit, j)
                break
    if found is None:
        return VerifyResult(True, None, eta * (eta - 1) // 2, strategy, 1)
    i0, j0 = found
    return VerifyResult(False, (i0 + 1, j0 + 1), j0 * (j0 + 1) // 2, strategy, 1)


def verify_shelling(
    order: ShellingOrder,
    strategy: str = "pairwise",
    jobs: int = 1,
) -> VerifyResult:
    """Check the single-swap shelling condition over every pair i < j.

    Returns ok, or the failing pair (i, j) minimal in (j, i) order.  A
    successful run marks the order as verified.
    """
    if strategy not in ("pairwise", "lambda-complement"):
        raise InvalidParams(f"unknown strategy {strategy!r}")
    if jobs < 1:
        raise InvalidParams(f"jobs must be >= 1, got {jobs}")
    _check_cover(order)
    if order.n_facets <= 1:
        order.verified = True
        return VerifyResult(True, None, 0, strategy, jobs)
    if order.cx.k == 3 and order.n_vertices <= DENSE_TABLE_MAX_VERTICES:
        result = _verify_k3(order, strategy, jobs)
    else:
        result = _verify_generic(order, strategy)
    if result.ok:
        order.verified = True
    return result


# ---------------------------------------------------------------------------
# spanning facets
# ---------------------------------------------------------------------------

def spanning_count_formula(m: int, n: int) -> int:
    """Closed form for the number of spanning facets:
    C(N-1, 2) - [(6m+2)n + (2m-4)], the subtracted term being the induced
    path count 6mn + 2m + 2n - 4."""
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    N = 2 * m + 2 * n + 2 * m * n
    return comb(N - 1, 2) - ((6 * m + 2) * n + (2 * m - 4))


@dataclass
class SpanningReport:
    """Spanning verdicts for a verified order."""

    spanning_flags: tuple[bool, ...]
    psi: int
    spanning_complements: tuple[tuple[int, ...], ...]
    non_spanning_pairs: tuple[tuple[int, int], ...]
    witness_map: dict[tuple[int, int], int] = field(default_factory=dict, repr=False)


def spanning_facets(order: ShellingOrder, allow_unverified: bool = False) -> SpanningReport:
    """Flag each facet as spanning iff its swap set covers the whole facet.

    ``non_spanning_pairs`` lists every pair (x, y) with x < y < N for which
    the triple {x, y, N} is NOT the complement of a spanning facet, whether
    because that facet is non-spanning or because the triple is connected
    and no such facet exists.  Spanning facets always put the last vertex
    in their complement, so these pairs determine the spanning count.
    """
    if not (order.verified or allow_unverified):
        raise UnverifiedOrder("verify the order first or pass allow_unverified=True")
    _check_cover(order)
    N = order.n_vertices
    if order.cx.k == 3 and N <= DENSE_TABLE_MAX_VERTICES:
        swaps = _swap_table(order)
        fill = swaps[:, 1:].sum(axis=1)
        flags = tuple(bool(b) for b in (fill == N - 3))
        swap_sets = None
    else:
        flags_l = []
        swap_sets = []
        for j in range(1, order.n_facets + 1):
            lam = swap_set(order, j)
            flags_l.append(len(lam) == N - order.cx.k)
            swap_sets.append(lam)
        flags = tuple(flags_l)

    spanning_comps = tuple(
        order.facets[j] for j in range(order.n_facets) if flags[j]
    )
    span_pairs = {
        (c[0], c[1]) for c in spanning_comps if len(c) == 3 and c[2] == N
    }
    non_spanning = tuple(
        (x, y)
        for x in range(1, N)
        for y in range(x + 1, N)
        if (x, y) not in span_pairs
    )

    witness: dict[tuple[int, int], int] = {}
    for j in range(order.n_facets):
        c = order.facets[j]
        if flags[j] or len(c) != 3 or c[2] != N:
            continue
        if swap_sets is None:
            row = swaps[j]
            outside = [v for v in range(1, N + 1) if not row[v] and v not in c]
        else:
            lam = swap_sets[j]
            outside = [v for v in range(1, N + 1) if v not in lam and v not in c]
        if outside:
            witness[(c[0], c[1])] = min(outside)
    return SpanningReport(
        spanning_flags=flags,
        psi=sum(flags),
        spanning_complements=spanning_comps,
        non_spanning_pairs=non_spanning,
        witness_map=witness,
    )


def check_spanning_structure(order: ShellingOrder, report: SpanningReport) -> bool:
    """True iff every spanning complement contains the last vertex and every
    tail facet is non-spanning."""
    N = order.n_vertices
    if any(c[-1] != N for c in report.spanning_complements):
        return False
    for t in order.tail:
        p = order.position[t.complement]
        if report.spanning_flags[p - 1]:
            return False
    return True


# ---------------------------------------------------------------------------
# the tabulated non-spanning pairs and their blocking vertices
# ---------------------------------------------------------------------------

def non_spanning_pair_table(m: int, n: int) -> list[tuple[int, int, int]]:
    """The eight tabulated families of non-spanning pairs, as printed,
    deduplicated with the first family tag retained.

    Pairs are validated to satisfy x < y <= N-1; entries whose second
    coordinate would reach N are dropped.  Empty ranges emit nothing.
    """
    if m < 1 or n < 1:
        raise InvalidParams(f"need m >= 1 and n >= 1, got m={m}, n={n}")
    z = 2 * m + 2 * n + 2 * m * n
    h = m + n + m * n
    table: dict[tuple[int, int], int] = {}

    def emit(x: int, y: int, fam: int) -> None:
        if 1 <= x < y <= z - 1 and (x, y) not in table:
            table[(x, y)] = fam

    for i in range(1, m):  # family 1
        emit(i, i + 1, 1)
        emit(i, i + m, 1)
        emit(i, i + m + 1, 1)
        emit(i, i + h, 1)
    emit(m, 2 * m, 2)  # family 2
    emit(m, 2 * m + 1, 2)
    emit(m, m + h, 2)
    for k1 in range(1, n):  # family 3: the tail-center bands
        for i in range(k1 * (m + 1), k1 * (m + 1) + m):
            emit(i, i + 1, 3)
            emit(i, i + m + 1, 3)
            emit(i, i + m + 2, 3)
            emit(i, i + (m + 1) * n, 3)
            emit(i, i + h + 1, 3)
    for k2 in range(2, n + 1):  # family 4
        i = k2 * (m + 1) - 1
        emit(i, i + m + 1, 4)
        emit(i, i + (m + 1) * n, 4)
    for i in range(n + m * n + 1, h):  # family 5
        emit(i, i + 1, 5)
        emit(i, i + (m + 1) * n, 5)
        emit(i, i + h, 5)
    i6 = (m + 1) * n  # family 6
    emit(i6, i6 + 1, 6)
    emit(i6, i6 + (m + 1) * n, 6)
    emit(h, h + (m + 1) * n, 7)  # family 7
    excluded = {2 * n + 2 * m * n} | {h + t * (m + 1) for t in range(1, n)}
    for i in range(h + 1, z - m):  # family 8
        if i not in excluded:
            emit(i, i + m + 1, 8)

    return sorted((x, y, fam) for (x, y), fam in table.items())


@dataclass(frozen=True)
class WitnessEntry:
    pair: tuple[int, int]
    blocker: int
    type_tag: str
    status: str  # confirmed | refuted | no_facet | invalid_witness
    trace: tuple[str, ...]


@dataclass
class WitnessReport:
    entries: list[WitnessEntry]

    @property
    def confirmed(self) -> list[WitnessEntry]:
        return [e for e in self.entries if e.status == "confirmed"]

    @property
    def failures(self) -> list[WitnessEntry]:
        return [e for e in self.entries if e.status == "refuted"]


def _typed_witnesses(m: int, n: int) -> list[tuple[tuple[int, int], int, str]]:
    """The tabulated blocking vertex per typed pair, following the printed
    per-type formulas (pairs outside [1, N-1] are skipped)."""
    z = 2 * m + 2 * n + 2 * m * n
    h = m + n + m * n
    out: dict[tuple[int, int], tuple[int, str]] = {}

    def emit(x: int, y: int, lam: int, tag: str) -> None:
        if 1 <= x < y <= z - 1 and (x, y) not in out:
            out[(x, y)] = (lam, tag)

    bands = [
        i for k1 in range(1, n) for i in range(k1 * (m + 1), k1 * (m + 1) + m)
    ]
    for i in range(1, m):  # type 1a (low range)
        emit(i, i + 1, i + h + 1, "1a")
    for i in range((m + 1) * n, h):  # type 1a (high range)
        emit(i, i + 1, i + h + 1, "1a")
    for i in bands:  # type 1b
        emit(i, i + 1, i + h + 2, "1b")
    for i in range(1, m + 1):  # type 2
        emit(i, i + m, (m + 1) * n + i, "2")
    for i in range(1, m + 1):  # type 3a
        emit(i, i + m + 1, i + h + 1, "3a")
    for k2 in range(2, n + 1):
        i = k2 * (m + 1) - 1
        emit(i, i + m + 1, i + h + 1, "3a")
    for i in bands:  # type 3b
        emit(i, i + m + 1, i + h + 2, "3b")
    excluded = {2 * n + 2 * m * n} | {h + t * (m + 1) for t in range(1, n + 1)}
    for i in range(h + 1, z - m):  # type 3c
        if i not in excluded:
            emit(i, i + m + 1, i + m + 2, "3c")
    for i in bands:  # type 4
        emit(i, i + m + 2, i + h + 2, "4")
    for i in bands:  # type 5a
        emit(i, i + (m + 1) * n, i + h + 1, "5a")
    for k2 in range(2, n + 1):  # type 5b
        i = k2 * (m + 1) - 1
        emit(i, i + (m + 1) * n, i + h + 1, "5b")
    emit((m + 1) * n, 2 * (m + 1) * n, (m + 1) * n + h + 1, "5b")
    for i in range(n + m * n + 1, h):  # type 5c
        emit(i, i + (m + 1) * n, i + h, "5c")
    emit(h, h + (m + 1) * n, 2 * h, "5d")  # type 5d
    for i in range(1, m + 1):  # type 6
        emit(i, i + h, i + h + 1, "6")
    for i in range(n + m * n + 1, h):
        emit(i, i + h, i + h + 1, "6")
    for i in bands:  # type 7
        emit(i, i + h + 1, i + h + 2, "7")

    return sorted(((x, y), lam, tag) for (x, y), (lam, tag) in out.items())


def non_spanning_witnesses(order: ShellingOrder, strict: bool = False) -> WitnessReport:
    """Check, pair by pair, that the tabulated blocking vertex obstructs the
    spanning condition: every single-entry swap of {x, y, N} toward the
    blocker must be a later facet or no facet at all.

    Refutations are reported, never patched; ``strict`` raises instead.
    """
    g = _require_hex3(order.cx)
    N = order.n_vertices
    index = order.position
    entries: list[WitnessEntry] = []
    for (x, y), lam, tag in _typed_witnesses(g.m, g.n):
        triple = tuple(sorted((x, y, N)))
        j = index.get(triple)
        if j is None:
            entries.append(
                WitnessEntry((x, y), lam, tag, "no_facet", (f"{triple} is connected",))
            )
            continue
        if not (1 <= lam <= N) or lam in triple:
            entries.append(
                WitnessEntry((x, y), lam, tag, "invalid_witness",
                             (f"blocker {lam} not available for {triple}",))
            )
            continue
        trace = []
        refuted = False
        for alpha in triple:
            cand = tuple(sorted((set(triple) - {alpha}) | {lam}))
            p = index.get(cand)
            if p is None:
                trace.append(f"swap {alpha}: {cand} not a facet")
            elif p >= j:
                trace.append(f"swap {alpha}: {cand} at later position {p}")
            else:
                trace.append(f"swap {alpha}: {cand} is EARLIER at {p} (< {j})")
                refuted = True
        entries.append(
            WitnessEntry((x, y), lam, tag, "refuted" if refuted else "confirmed",
                         tuple(trace))
        )
    report = WitnessReport(entries)
    if strict and report.failures:
        bad = ", ".join(f"{e.pair}->{e.blocker}" for e in report.failures)
        raise WitnessFailure(f"blocking vertices fail to obstruct: {bad}")
    return report


# ---------------------------------------------------------------------------
# tail obstruction in the plain sorted order
# ---------------------------------------------------------------------------

def verify_tail_obstruction(cx: CutComplex) -> bool:
    """Confirm that each tail facet, left at its sorted position, breaks the
    shelling condition against the specific earlier facet with complement
    {center, N-1, N}.

    Every candidate swap either has a connected complement (when the swap
    vertex is the center) or sorts after the tail facet; both outcomes are
    required, and the dichotomy itself is asserted.
    """
    g = _require_hex3(cx)
    tail = tail_facets(g.m, g.n, g)
    if not tail:
        raise NoTailFacets(f"H({g.m},{g.n}) has no tail facets")
    N = cx.n_vertices
    base = sorted(cx.facets)
    pos = {t: i + 1 for i, t in enumerate(base)}
    for t in tail:
        j_i = pos[t.complement]
        blocker_comp = tuple(sorted((t.center, N - 1, N)))
        p_blocker = pos.get(blocker_comp)
        if p_blocker is None or p_blocker >= j_i:
            return False
        swap_candidates = set(blocker_comp) - set(t.complement)
        if not swap_candidates:
            return False
        for lam in swap_candidates:
            for alpha in t.complement:
                cand = tuple(sorted((set(t.complement) - {alpha}) | {lam}))
                p = pos.get(cand)
                if lam == t.center:
                    if p is not None:  # center swap must close up a connected triple
                        return False
                else:
                    if p is None or p <= j_i:  # other swaps must sort after
                        return False
    return True


# ---------------------------------------------------------------------------
# exploratory verification for general k
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExploreVerdict:
    k: int
    rule: str
    n_facets: int
    ok: bool
    counterexample: tuple[int, int] | None
    relocated: tuple[tuple[int, ...], ...]


def verify_k_cut_order(
    g: Graph,
    k: int,
    rule: str = "revlex",
    pair_guard: int = PAIR_GUARD,
    force: bool = False,
    strategy: str = "pairwise",
    jobs: int = 1,
) -> ExploreVerdict:
    """Build the k-cut complex, order facets by the named rule, verify.

    ``revlex`` sorts complements ascending lexicographically;
    ``revlex-with-neighborhood-tail`` additionally relocates every facet
    whose complement is an open vertex neighborhood of size k to the end,
    in complement-lex order.  Purely mechanical; no claim beyond the verdict.
    """
    if rule not in ("revlex", "revlex-with-neighborhood-tail"):
        raise InvalidParams(f"unknown ordering rule {rule!r}")
    from .cutcomplex import enumerate_facets

    cx = enumerate_facets(g, k)
    eta = cx.n_facets
    if eta * (eta - 1) // 2 > pair_guard and not force:
        raise ResourceGuard(
            f"{eta} facets imply {eta * (eta - 1) // 2} pairs > guard {pair_guard}"
        )
    seq = sorted(cx.facets)
    relocated: list[tuple[int, ...]] = []
    if rule == "revlex-with-neighborhood-tail":
        hoods = set()
        for v in g.vertices():
            nb = g.neighbors(v)
            if len(nb) == k and nb in cx.facet_index:
                hoods.add(nb)
        relocated = sorted(hoods)
        rset = set(relocated)
        seq = [f for f in seq if f not in rset] + relocated
    order = _make_order(cx, seq, (), len(seq) - len(relocated))
    res = verify_shelling(order, strategy=strategy, jobs=jobs)
    return ExploreVerdict(
        k=k,
        rule=rule,
        n_facets=eta,
        ok=res.ok,
        counterexample=res.counterexample,
        relocated=tuple(relocated),
    )


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def order_to_json_dict(order: ShellingOrder) -> dict:
    g = order.cx.graph
    out: dict = {}
    if isinstance(g, HexGraph):
        out["m"] = g.m
        out["n"] = g.n
    out["k"] = order.cx.k
    out["order"] = [list(t) for t in order.facets]
    out["t_tail_start"] = order.base_count + 1
    return out


def spanning_report_to_json_dict(report: SpanningReport) -> dict:
    return {
        "psi": report.psi,
        "spanning_complements": [list(c) for c in report.spanning_complements],
        "non_spanning_pairs": [list(p) for p in report.non_spanning_pairs],
    }


def spanning_report_to_csv(report: SpanningReport) -> str:
    lines = ["kind,x,y"]
    for c in report.spanning_complements:
        lines.append(f"spanning,{c[0]},{c[1]}")
    for x, y in report.non_spanning_pairs:
        lines.append(f"non_spanning,{x},{y}")
    return "\n".join(lines) + "\n"
