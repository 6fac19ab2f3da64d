import json
import subprocess
import sys

import pytest

from refpoly import cli
from refpoly import graphs as G


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_cycle5_json(capsys):
    code, out, _ = run(capsys, "analyze", "--cycle", "5", "--json")
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"graph", "gamma", "omega", "theorems"}
    assert rep["gamma"]["delta"] == ["1", "15", "60", "62", "15", "1"]
    assert rep["omega"]["delta"] == ["1", "16", "75", "124", "75", "16", "1"]
    assert not rep["gamma"]["reflexive"] and rep["omega"]["reflexive"]
    assert rep["gamma"]["idp"]["holds"] and not rep["omega"]["idp"]["holds"]
    assert rep["omega"]["idp"]["witness"]["n"] == 3
    assert rep["graph"]["hansen"]
    assert rep["graph"]["perfect"]["g1"] == {"spgt": False, "definition": False}
    assert rep["theorems"]["omega_idp_iff_perfect"]["consistent"]
    assert "squarefree_initial_ideal" in rep["theorems"]


def test_json_is_sorted_and_deterministic(capsys):
    _, first, _ = run(capsys, "analyze", "--path", "3", "--complete", "3", "--json")
    _, second, _ = run(capsys, "analyze", "--path", "3", "--complete", "3", "--json")
    assert first == second
    assert first.strip() == json.dumps(json.loads(first), sort_keys=True)


def test_two_graphs_and_flags(capsys):
    code, out, _ = run(capsys, "analyze", "--path", "3", "--complete", "3", "--json",
                       "--skip-groebner", "--idp-bound", "2")
    assert code == 0
    rep = json.loads(out)
    assert rep["graph"]["g1"]["source"] == "path 3"
    assert rep["graph"]["g2"]["source"] == "complete 3"
    assert not rep["graph"]["hansen"]
    assert rep["omega"]["idp"]["checked_bound"] == 2
    assert "squarefree_initial_ideal" not in rep["theorems"]
    assert rep["theorems"]["delta_identity"]["identity_holds"]


def test_skip_idp_omits_idp_fields(capsys):
    _, out, _ = run(capsys, "analyze", "--path", "2", "--json", "--skip-idp", "--skip-groebner")
    rep = json.loads(out)
    assert "idp" not in rep["gamma"] and "idp" not in rep["omega"]
    assert "omega_idp_iff_perfect" not in rep["theorems"]


def test_facets_block(capsys):
    code, out, _ = run(capsys, "analyze", "--complete-multipartite", "2,2,2", "--facets",
                       "--skip-idp", "--skip-groebner", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["omega"]["facets"] == 54
    assert rep["gamma_suspension"]["facets"] == 432
    assert rep["gamma_suspension"]["delta"] == rep["omega"]["delta"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "analyze", "--path", "2", "--skip-groebner")
    assert code == 0
    assert "Omega:" in out and "reflexive        yes" in out


def test_edge_and_graph6_files(tmp_path, capsys):
    e = tmp_path / "g.txt"
    e.write_text(G.format_edge_list(G.cycle(5)))
    s = tmp_path / "g.g6"
    s.write_text(G.to_graph6(G.cycle(5)) + "\n")
    _, a, _ = run(capsys, "delta", "--edges", str(e), "--json")
    _, b, _ = run(capsys, "delta", "--graph6", str(s), "--json")
    _, c, _ = run(capsys, "delta", "--cycle", "5", "--json")
    assert a == b == c


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "--cycle", "x"],
        ["analyze", "--cycle", "2"],
        ["analyze", "--edges", "/nonexistent/file"],
        ["analyze", "--path", "3", "--path", "4"],
        ["analyze", "--path", "3", "--path", "3", "--path", "3"],
        ["analyze", "--complete-multipartite", "2,x"],
        ["analyze", "--idp-bound", "0", "--path", "2"],
        ["nonsense"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bad_graph6_file(tmp_path, capsys):
    s = tmp_path / "bad.g6"
    s.write_text("D!!\n")
    code, _, _ = run(capsys, "analyze", "--graph6", str(s))
    assert code == 2


def test_capacity_exit_3(capsys, caplog, monkeypatch):
    monkeypatch.setenv("REFPOLY_MAX_DIM", "4")
    code, _, _ = run(capsys, "analyze", "--cycle", "5")
    assert code == 3 and "REFPOLY_MAX_DIM" in caplog.text
    monkeypatch.setenv("REFPOLY_MAX_DIM", "abc")
    code, _, _ = run(capsys, "analyze", "--cycle", "5")
    assert code == 2


def test_examples_single(capsys):
    code, out, _ = run(capsys, "examples", "--only", "4.1")
    assert code == 0 and "Example 4.1: PASS" in out
    code, _, _ = run(capsys, "examples", "--only", "9.9")
    assert code == 2


def test_examples_injected_fault(tmp_path, capsys):
    golden = cli.load_golden()
    golden["4.1"]["gamma"]["delta"][3] = "63"
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(golden))
    code, out, _ = run(capsys, "examples", "--only", "4.1", "--golden", str(path))
    assert code == 1
    assert "Example 4.1: gamma delta_3: expected 63, computed 62" in out


def test_examples_json(capsys):
    code, out, _ = run(capsys, "examples", "--only", "4.4", "--json")
    assert code == 0
    assert json.loads(out) == {"4.4": {"pass": True, "discrepancies": []}}


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "sweep", "--max-vertices", "3")
    assert code == 0
    lines = [json.loads(x) for x in out.strip().splitlines()]
    records, summary = lines[:-1], lines[-1]["summary"]
    assert len(records) == 1 + 2 + 4
    assert summary["omega_reflexive_up_to_6_vertices"]
    assert all(r["consistent"] for r in records)
    assert all("squarefree_consistent" in r and "omega_idp" in r for r in records)


def test_sweep_graph6_stream_with_bad_line(tmp_path, capsys, caplog):
    s = tmp_path / "in.g6"
    s.write_text("\n".join([G.to_graph6(G.cycle(5)), "garbage!", G.to_graph6(G.path(4))]) + "\n")
    code, out, _ = run(capsys, "sweep", "--graph6", str(s), "--skip-groebner")
    assert code == 2
    assert "skipping line 2" in caplog.text
    lines = [json.loads(x) for x in out.strip().splitlines()]
    assert [r["graph6"] for r in lines[:-1]] == [G.to_graph6(G.cycle(5)), G.to_graph6(G.path(4))]
    assert lines[-1]["summary"]["skipped"] == 1
    assert lines[0]["omega_idp"] is False and lines[0]["perfect"] is False


def test_sweep_caps(capsys):
    assert run(capsys, "sweep", "--max-vertices", "7")[0] == 3
    assert run(capsys, "sweep", "--max-vertices", "8", "--skip-idp", "--skip-groebner")[0] == 3


def test_groebner_subcommand(capsys):
    code, out, _ = run(capsys, "groebner", "--path", "3", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["matches_prediction"] and rep["combined_squarefree"]
    assert rep["combined_basis"]


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "refpoly.cli", "delta", "--cycle", "5"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "gamma: 1, 15, 60, 62, 15, 1" in proc.stdout
