"""Spanning facets, the tabulated pair families, and blocking vertices."""

import pytest

from hexcut import (
    InvalidParams,
    UnverifiedOrder,
    build_hex_graph,
    check_spanning_structure,
    enumerate_facets,
    non_spanning_pair_table,
    non_spanning_witnesses,
    shelling_order,
    spanning_count_formula,
    spanning_facets,
)
from hexcut.shelling import (
    spanning_report_to_csv,
    spanning_report_to_json_dict,
)

from conftest import oracle_spanning_flags


def test_formula_values():
    assert spanning_count_formula(1, 1) == 4
    assert spanning_count_formula(1, 2) == 22
    assert spanning_count_formula(2, 2) == 77
    assert spanning_count_formula(4, 6) == 2051
    with pytest.raises(InvalidParams):
        spanning_count_formula(1, 0)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2)])
def test_spanning_flags_match_full_set_oracle(m, n):
    bundle_g = build_hex_graph(m, n)
    cx = enumerate_facets(bundle_g, 3)
    order = shelling_order(cx)
    from hexcut import verify_shelling

    verify_shelling(order)
    report = spanning_facets(order)
    verts = set(range(1, bundle_g.n_vertices + 1))
    facet_sets = [frozenset(verts - set(c)) for c in order.facets]
    assert list(report.spanning_flags) == oracle_spanning_flags(facet_sets)
    assert report.psi == spanning_count_formula(m, n)


@pytest.mark.parametrize(
    "m,n,psi",
    [(1, 1, 4), (1, 2, 22), (2, 2, 77), (2, 3, 168), (3, 3, 344)],
)
def test_psi_values(instance, m, n, psi):
    bundle = instance(m, n)
    assert bundle.report.psi == psi == spanning_count_formula(m, n)


def test_requires_verified_order():
    cx = enumerate_facets(build_hex_graph(1, 1), 3)
    order = shelling_order(cx)
    with pytest.raises(UnverifiedOrder):
        spanning_facets(order)
    report = spanning_facets(order, allow_unverified=True)
    assert report.psi == 4


def test_non_spanning_pair_count_is_triple_count(instance):
    from math import comb

    for m, n in [(1, 1), (1, 2), (2, 2), (3, 2)]:
        bundle = instance(m, n)
        N = bundle.g.n_vertices
        assert (
            len(bundle.report.non_spanning_pairs)
            == comb(N - 1, 2) - bundle.report.psi
        )


def test_spanning_structure_rule(instance):
    for m, n in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 1)]:
        bundle = instance(m, n)
        assert check_spanning_structure(bundle.order, bundle.report)
        N = bundle.g.n_vertices
        assert all(c[2] == N for c in bundle.report.spanning_complements)


def test_table_smallest_case_exact(instance):
    bundle = instance(1, 1)
    table = {(x, y) for x, y, _ in non_spanning_pair_table(1, 1)}
    assert table == {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5)}
    assert table == set(bundle.report.non_spanning_pairs)


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)])
def test_table_exact_for_single_column(instance, m, n):
    bundle = instance(m, n)
    table = {(x, y) for x, y, _ in non_spanning_pair_table(m, n)}
    assert table == set(bundle.report.non_spanning_pairs)


def test_table_family_counts_4_6():
    from collections import Counter

    counts = Counter(fam for _, _, fam in non_spanning_pair_table(4, 6))
    assert counts[1] == 4 * (4 - 1) == 12
    assert counts[2] == 3
    assert counts[3] == 5 * 4 * (6 - 1) == 100
    assert counts[4] == 2 * (6 - 1) == 10
    assert counts[5] == 3 * (4 - 1) == 9
    assert counts[6] == 2
    assert counts[7] == 1
    # family 8 prints mn-1 indices, one of which pairs with the last
    # vertex itself and is dropped as out of range
    assert counts[8] == 4 * 6 - 1 - 1 == 22
    assert sum(counts.values()) == 160 - 1


def expected_table_diff(m, n):
    """The systematic family-8 boundary correction for m >= 2: tabulated
    indices above 2n+2mn actually pair as (i, i+m), not (i, i+m+1)."""
    z = 2 * m + 2 * n + 2 * m * n
    h = m + n + m * n
    excl = {2 * n + 2 * m * n} | {h + t * (m + 1) for t in range(1, n)}
    flipped = [
        i for i in range(h + 1, z - m) if i not in excl and i > 2 * n + 2 * m * n
    ]
    only_computed = sorted((i, i + m) for i in flipped)
    only_table = sorted((i, i + m + 1) for i in flipped if i + m + 1 <= z - 1)
    return only_computed, only_table


@pytest.mark.parametrize("m,n", [(2, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 1)])
def test_table_diff_is_the_known_boundary_correction(instance, m, n):
    bundle = instance(m, n)
    computed = set(bundle.report.non_spanning_pairs)
    table = {(x, y) for x, y, _ in non_spanning_pair_table(m, n)}
    only_computed, only_table = expected_table_diff(m, n)
    assert sorted(computed - table) == only_computed
    assert sorted(table - computed) == only_table


def test_witness_table_values_2_2(instance):
    bundle = instance(2, 2)
    report = non_spanning_witnesses(bundle.order)
    by_pair = {e.pair: e for e in report.entries}
    assert by_pair[(1, 3)].blocker == 7  # (i, i+m) at i=1: (m+1)n + i
    assert by_pair[(1, 2)].blocker == 10  # (i, i+1) at i=1: i + m+n+mn + 1
    # most entries confirm mechanically; the rest are reported, not patched
    statuses = {e.status for e in report.entries}
    assert statuses <= {"confirmed", "refuted", "no_facet", "invalid_witness"}
    assert len(report.confirmed) > len(report.failures)


def test_witness_refutations_are_reported_not_raised(instance):
    bundle = instance(1, 1)
    report = non_spanning_witnesses(bundle.order)
    refuted = {e.pair for e in report.failures}
    assert (1, 2) in refuted  # its tabulated blocker admits an earlier swap
    from hexcut import WitnessFailure

    with pytest.raises(WitnessFailure):
        non_spanning_witnesses(bundle.order, strict=True)


def test_witness_traces_cover_all_three_swaps(instance):
    bundle = instance(2, 2)
    report = non_spanning_witnesses(bundle.order)
    for e in report.entries:
        if e.status in ("confirmed", "refuted"):
            assert len(e.trace) == 3


def test_report_exports(instance):
    bundle = instance(1, 1)
    doc = spanning_report_to_json_dict(bundle.report)
    assert doc["psi"] == 4
    assert len(doc["non_spanning_pairs"]) == 6
    assert doc["non_spanning_pairs"] == sorted(doc["non_spanning_pairs"])
    csv = spanning_report_to_csv(bundle.report)
    assert csv.splitlines()[0] == "kind,x,y"
    assert csv.count("non_spanning") == 6
    assert csv.count("\nspanning") == 4
