import io
import json
import subprocess
import sys

import pytest

from hyperturan.cli import main
from hyperturan.hypergraph import complete_graph, parse_hg, write_hg
from hyperturan.constructions import turan_hypergraph


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_construct_turan_hg():
    code, text = run("construct", "turan", "--n", "6", "--k", "3", "--r", "3", "--format", "hg")
    assert code == 0
    h = parse_hg(text)
    assert len(h.edges) == 8 and h == turan_hypergraph(6, 3, 3)


def test_global_flag_before_subcommand():
    code, text = run("--format", "json", "construct", "book", "--k", "2")
    assert code == 0 and len(json.loads(text)["edges"]) == 6


def test_construct_missing_param_is_usage_error():
    assert run("construct", "hprime", "--n", "7", "--k", "3")[0] == 2


def test_construct_count_only():
    code, text = run("construct", "hprime", "--n", "7", "--k", "3", "--r", "3", "--m", "3", "--count-only", "--format", "json")
    assert code == 0 and json.loads(text)["edges"] == 19


def test_contains_not_contained(tmp_path):
    write_hg(turan_hypergraph(5, 3, 3), tmp_path / "h.hg")
    write_hg(complete_graph(3), tmp_path / "k3.g")
    code, text = run("contains", "--host", str(tmp_path / "h.hg"), "--core", str(tmp_path / "k3.g"), "--r", "3")
    assert code == 0 and text.strip() == "not contained"


def test_contains_json_witness(tmp_path):
    write_hg(turan_hypergraph(9, 3, 3), tmp_path / "h.hg")
    code, text = run("contains", "--host", str(tmp_path / "h.hg"), "--core", "P3", "--r", "3", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["contained"] and len(data["witness"]["edge_assignment"]) == 2


def test_bad_file_is_usage_error(tmp_path):
    bad = tmp_path / "bad.hg"
    bad.write_text("4 3\n0 1\n")
    assert run("shadow", "--host", str(bad))[0] == 2
    assert run("shadow", "--host", str(tmp_path / "missing.hg"))[0] == 2


def test_unknown_subcommand_and_suite():
    assert run("frobnicate")[0] == 2
    assert run("verify", "no-such-suite")[0] == 2
    assert run()[0] == 2


def test_help_exits_zero():
    assert run("--help")[0] == 0


def test_budget_exceeded_exit_code():
    code, text = run("search", "ex-hyper", "--n", "7", "--r", "3", "--core", "K3", "--budget-nodes", "0")
    assert code == 3 and json.loads(text)["exhaustive"] is False


def test_search_ex_graph():
    code, text = run("search", "ex-graph", "--n", "6", "--forbid", "K3")
    assert code == 0 and json.loads(text)["value"] == 9


def test_search_local_text():
    code, text = run("search", "local", "--n", "6", "--r", "3", "--core", "K3", "--steps", "50", "--format", "text")
    assert code == 0 and text.startswith("value=")


def test_chromatic_and_critical():
    assert run("chromatic", "--graph", "C5")[1].strip() == "3"
    code, text = run("critical", "--graph", "K2,3")
    assert code == 0 and text.strip() == "(none)"


def test_decomp_json():
    code, text = run("decomp", "--graph", "B2", "--full", "--format", "json")
    assert code == 0 and not json.loads(text)["minimal"]


def test_biex():
    assert run("biex", "--graph", "B2", "--n", "6")[1].strip() == "1"


def test_optimal_m():
    code, text = run("optimal-m", "--n", "7", "--k", "3", "--r", "3", "--format", "json")
    assert code == 0 and json.loads(text)["argmax"] == [2]


def test_gap_table_csv():
    code, text = run("gap-table", "--core", "K3", "--r", "3", "--n-min", "4", "--n-max", "5")
    lines = text.strip().splitlines()
    assert code == 0
    assert lines[0] == "n,lb_clique,clique_exhaustive,lb_fixed,lb_turan_cone,lb_hprime,value,exhaustive"
    assert lines[1].split(",")[-2:] == ["4", "True"]


def test_heavy_and_fatgraph(tmp_path):
    write_hg(turan_hypergraph(6, 3, 3), tmp_path / "h.hg")
    a = parse_hg(run("heavy", "--host", str(tmp_path / "h.hg"), "--t", "2")[1])
    b = parse_hg(run("fatgraph", "--host", str(tmp_path / "h.hg"), "--t", "2")[1])
    assert a == b and len(a.edges) == 12
    c = parse_hg(run("heavy", "--host", str(tmp_path / "h.hg"), "--t", "2", "--target", "1")[1])
    assert c.r == 1


def test_analyze_structure_json(tmp_path):
    code, text = run("construct", "turan-cone", "--n", "9", "--k", "3", "--r", "3", "--i", "1")
    (tmp_path / "c.hg").write_text(text)
    code, text = run("analyze-structure", "--host", str(tmp_path / "c.hg"), "--k", "3", "--t", "2",
                     "--theta", "0.2", "--format", "json")
    assert code == 0 and json.loads(text)["b_candidates"] == [0]


@pytest.mark.parametrize("fmt", ["json", "hg", "csv"])
def test_expand_formats_round_trip(fmt):
    code, text = run("expand", "--core", "K3", "--r", "3", "--format", fmt)
    assert code == 0
    if fmt == "json":
        data = json.loads(text)
        assert data["edges"] == [[0, 1, 3], [0, 2, 4], [1, 2, 5]]
    elif fmt == "hg":
        assert parse_hg(text).edges == ((0, 1, 3), (0, 2, 4), (1, 2, 5))
    else:
        assert text.splitlines()[1:] == ["0,1,3", "0,2,4", "1,2,5"]


def test_verify_biex_book_passes():
    code, text = run("verify", "biex-book")
    assert code == 0 and json.loads(text)["pass"] is True


def test_verify_failure_exit_code():
    code, text = run("verify", "optimal-m-r3")
    assert code == 1 and json.loads(text)["pass"] is False


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperturan.cli", "construct", "fixed-vertex", "--n", "5", "--r", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and len(parse_hg(proc.stdout).edges) == 6
