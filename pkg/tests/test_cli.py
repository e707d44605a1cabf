"""Command-line surface: formats, exit codes, determinism."""

import json

import pytest

from hexcut.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_graph_edges_smallest(capsys):
    code, out = run(capsys, "graph", "--m", "1", "--n", "1", "--format", "edges")
    assert code == 0
    assert len(out.strip().splitlines()) == 6


def test_graph_json_4_6(capsys):
    code, out = run(capsys, "graph", "--m", "4", "--n", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == 68
    assert doc["tool_version"]
    assert [11, 47] in doc["edges"]


def test_graph_dot(capsys):
    code, out = run(capsys, "graph", "--m", "1", "--n", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("graph ") and out.rstrip().endswith("}")


def test_usage_errors(capsys):
    assert main(["graph", "--m", "0", "--n", "1"]) == 2
    assert main(["graph", "--m", "1"]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_facets_and_guard(capsys, tmp_path):
    code, out = run(capsys, "facets", "--m", "1", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["facet_complements"]) == 14
    # (4,6) has 50116 candidate triples, above the enumeration guard
    assert main(["facets", "--m", "4", "--n", "6"]) == 3
    capsys.readouterr()


def test_order_output(capsys):
    code, out = run(capsys, "order", "--m", "1", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["t_tail_start"] == 106
    assert doc["order"][-1] == [6, 8, 9]


def test_verify_ok(capsys):
    code, out = run(capsys, "verify", "--m", "2", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] is True
    assert doc["n_facets"] == 532


def test_verify_no_relocate_fails_at_tail_position(capsys):
    code, out = run(capsys, "verify", "--m", "1", "--n", "2", "--no-relocate-t")
    assert code == 1
    doc = json.loads(out)
    assert doc["ok"] is False
    # counterexample lands exactly where the first tail facet sorts
    code2, out2 = run(capsys, "order", "--m", "1", "--n", "2", "--no-relocate-t")
    order = [tuple(t) for t in json.loads(out2)["order"]]
    assert doc["counterexample"][1] == order.index((6, 8, 9)) + 1


def test_verify_guard_without_force(capsys):
    assert main(["verify", "--m", "4", "--n", "6"]) == 3
    capsys.readouterr()


def test_spanning_report(capsys):
    code, out = run(capsys, "spanning", "--m", "1", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["psi"] == 4
    assert len(doc["non_spanning_pairs"]) == 6
    assert doc["psi_matches_formula"] is True
    assert doc["table_matches"] is True


def test_spanning_reports_table_diff_without_failing(capsys):
    code, out = run(capsys, "spanning", "--m", "2", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["psi"] == 77
    assert doc["psi_matches_formula"] is True
    assert doc["table_matches"] is False
    assert doc["table_diff"]["only_computed"] == [[13, 15]]
    assert doc["table_diff"]["only_table"] == []


def test_formulas(capsys):
    code, out = run(capsys, "formulas", "--m", "4", "--n", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["vertices"] == 68
    assert doc["top_dimension"] == 64
    assert doc["induced_p3"] == 160
    assert doc["facets"] == 49956
    assert doc["tail_facets"] == 22
    assert doc["spanning"] == 2051
    assert "6mn+2m+2n-4" in doc["note"]

    code, out = run(capsys, "formulas", "--m", "1", "--n", "1", "--format", "text")
    assert code == 0
    assert "spanning       4" in out


def test_euler(capsys):
    code, out = run(capsys, "euler", "--m", "4", "--n", "6")
    assert code == 0
    assert out.strip() == "2051"
    code, out = run(capsys, "euler", "--m", "1", "--n", "2", "--format", "json")
    assert json.loads(out)["matches"] is True


def test_homology_smallest(capsys):
    code, out = run(capsys, "homology", "--m", "1", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    assert doc["betti"]["2"] == 4
    assert doc["betti"]["-1"] == 0
    assert main(["homology", "--m", "2", "--n", "3"]) == 3  # N=22 over the limit
    capsys.readouterr()


def test_homology_wedge_verdict(capsys):
    code, out = run(capsys, "homology", "--m", "1", "--n", "1", "--wedge")
    assert code == 0
    doc = json.loads(out)
    assert set(doc["checks"]) == {"shelling", "spanning_eq_psi", "euler_eq_psi", "betti"}
    assert all(c["ran"] and c["pass"] for c in doc["checks"].values())
    assert doc["psi"] == 4 and doc["dimension"] == 2


def test_explore_records_verdict(capsys, tmp_path):
    out_file = tmp_path / "verdict.json"
    code = main([
        "explore", "--m", "1", "--n", "2", "--k", "4", "--out", str(out_file),
    ])
    assert code == 0
    doc = json.loads(out_file.read_text())
    assert doc["k"] == 4
    assert doc["n_facets"] == 190
    assert "ok" in doc and "counterexample" in doc


@pytest.mark.parametrize(
    "argv",
    [
        ["graph", "--m", "2", "--n", "2", "--format", "json"],
        ["facets", "--m", "1", "--n", "2"],
        ["order", "--m", "1", "--n", "2"],
        ["verify", "--m", "1", "--n", "2"],
        ["spanning", "--m", "2", "--n", "2"],
        ["formulas", "--m", "3", "--n", "3"],
        ["euler", "--m", "3", "--n", "4", "--format", "json"],
        ["homology", "--m", "1", "--n", "2"],
        ["explore", "--m", "1", "--n", "1", "--k", "2"],
    ],
)
def test_byte_identical_reruns(tmp_path, argv):
    f1 = tmp_path / "a.out"
    f2 = tmp_path / "b.out"
    assert main(argv + ["--out", str(f1)]) == main(argv + ["--out", str(f2)])
    assert f1.read_bytes() == f2.read_bytes()


def test_jobs_flag_deterministic(tmp_path):
    f1 = tmp_path / "j1.json"
    f2 = tmp_path / "j2.json"
    main(["verify", "--m", "2", "--n", "2", "--jobs", "1", "--out", str(f1)])
    main(["verify", "--m", "2", "--n", "2", "--jobs", "2", "--out", str(f2)])
    assert f1.read_bytes() == f2.read_bytes()
