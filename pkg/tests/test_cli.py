import csv
import io
import json
import subprocess
import sys

import pytest

from biproj import io as gio
from biproj.cli import main

from conftest import FIG2_EDGES, FIG3_EDGES, MATRIX_M_TEXT


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("algo", ["matrix", "sparse"])
def test_project_u(matrix_m_file, capsys, algo):
    code, out, _ = run(["project", matrix_m_file, "--algo", algo], capsys)
    assert code == 0
    assert gio.parse_projection(out).edges == FIG2_EDGES
    assert out.splitlines()[0] == "6"


@pytest.mark.parametrize("algo", ["matrix", "sparse"])
def test_project_s(matrix_m_file, capsys, algo):
    code, out, _ = run(["project", matrix_m_file, "--side", "s", "--algo", algo], capsys)
    assert code == 0
    assert out == "4\n0\t1\n0\t2\n1\t2\n1\t3\n"
    assert gio.parse_projection(out).edges == FIG3_EDGES


def test_project_weighted(matrix_m_file, capsys):
    code, out, _ = run(["project", matrix_m_file, "--weighted"], capsys)
    assert code == 0
    assert "1\t2\t2" in out.splitlines()
    assert sum(int(line.split("\t")[2]) for line in out.splitlines()[1:]) == 8


def test_project_is_deterministic(matrix_m_file, tmp_path, capsys):
    outs = []
    for k in range(2):
        target = tmp_path / f"out{k}.txt"
        assert run(["project", matrix_m_file, "--weighted", "-o", target], capsys)[0] == 0
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_project_dense_round_trip(matrix_m_file, capsys):
    _, dense, _ = run(["project", matrix_m_file, "--dense"], capsys)
    _, edges, _ = run(["project", matrix_m_file], capsys)
    back = gio.parse_biadjacency(dense)
    assert {(i, j) for i, j in back.edges if i < j} == gio.parse_projection(edges).edges


def test_project_edgeless(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("3 2\n")
    code, out, _ = run(["project", path], capsys)
    assert (code, out) == (0, "3\n")


def test_project_edge_list_input(tmp_path, capsys):
    path = tmp_path / "g.tsv"
    path.write_text(gio.format_edge_list(gio.parse_biadjacency(MATRIX_M_TEXT)))
    code, out, _ = run(["project", path, "--format", "edgelist"], capsys)
    assert code == 0 and gio.parse_projection(out).edges == FIG2_EDGES


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n0 1\n1 7\n")
    code, out, err = run(["project", path, "--format", "biadj"], capsys)
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_missing_file_exit_code(tmp_path, capsys):
    code, _, err = run(["stats", tmp_path / "nope.txt"], capsys)
    assert code == 3
    assert "cannot read" in err


def test_unwritable_output(matrix_m_file, tmp_path, capsys):
    code, _, err = run(["project", matrix_m_file, "-o", tmp_path / "no" / "dir" / "x"], capsys)
    assert code == 3


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["project"])
    assert info.value.code == 2


def test_stats(matrix_m_file, capsys):
    code, out, _ = run(["stats", matrix_m_file], capsys)
    assert code == 0
    rec = dict(line.split("=", 1) for line in out.splitlines())
    assert rec["m"] == "10"
    assert rec["sum_deg_u"] == rec["sum_deg_s"] == "10"
    assert rec["density_fraction"] == "10/24"
    assert rec["connected"] == "true"
    assert (rec["min_deg_u"], rec["max_deg_u"], rec["min_deg_s"], rec["max_deg_s"]) == ("1", "3", "2", "3")


def test_stats_json_complete_and_edgeless(tmp_path, capsys):
    k33 = tmp_path / "k33.txt"
    k33.write_text("3 3\n1 1 1\n1 1 1\n1 1 1\n")
    _, out, _ = run(["stats", k33, "--json"], capsys)
    assert json.loads(out)["density"] == 1.0
    empty = tmp_path / "e.txt"
    empty.write_text("2 2\n")
    _, out, _ = run(["stats", empty, "--json"], capsys)
    assert json.loads(out)["connected"] is False


def test_verify_matrix_m(matrix_m_file, capsys):
    code, out, _ = run(["verify", matrix_m_file], capsys)
    assert code == 0
    statuses = {line.split("\t")[0]: line.split("\t")[1] for line in out.splitlines()}
    assert len(statuses) == 6
    assert set(statuses.values()) <= {"PASS", "VACUOUS"}
    assert statuses["PendantDisconnection"] == "VACUOUS"


def test_verify_generated_pendant_instance(tmp_path, capsys):
    path = tmp_path / "pp.tsv"
    assert run(["gen", "--n1", 7, "--n2", 5, "--p", 0.5, "--seed", 9, "--pendant-pair", "-o", path], capsys)[0] == 0
    code, out, _ = run(["verify", path, "--json"], capsys)
    assert code == 0
    by_id = {r["property_id"]: r for r in json.loads(out)}
    assert by_id["PendantDisconnection"]["status"] == "PASS"
    assert by_id["PendantDisconnection"]["details"]["applicable"] is True


def test_verify_corrupted_projection(matrix_m_file, capsys):
    code, out, _ = run(["verify", matrix_m_file, "--debug-corrupt"], capsys)
    assert code == 1
    failing = [line for line in out.splitlines() if "\tFAIL\t" in line]
    assert failing
    assert any("counterexample." in line for line in failing)


def test_gen_formats(capsys):
    code, out, _ = run(["gen", "--n1", 3, "--n2", 3, "--model", "complete"], capsys)
    assert code == 0
    assert gio.parse_edge_list(out).m == 9
    _, out, _ = run(["gen", "--n1", 2, "--n2", 3, "--model", "fixedm", "--m", 0, "--out-format", "biadj"], capsys)
    assert out == "2 3\n0 0 0\n0 0 0\n"


def test_gen_is_deterministic(capsys):
    a = run(["gen", "--n1", 6, "--n2", 4, "--p", 0.4, "--seed", 5], capsys)[1]
    b = run(["gen", "--n1", 6, "--n2", 4, "--p", 0.4, "--seed", 5], capsys)[1]
    assert a == b


def test_gen_unsatisfiable(capsys):
    code, _, err = run(["gen", "--n1", 3, "--n2", 3, "--model", "fixedm", "--m", 2, "--connected"], capsys)
    assert code == 2
    assert "generator error" in err


def test_bench_csv(tmp_path, capsys):
    target = tmp_path / "bench.csv"
    code, _, err = run(
        ["bench", "--sizes", "8x6,16x6", "--sizes", "3x3", "--model", "fixedm", "--reps", 3, "-o", target], capsys
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(target.read_text())))
    assert list(rows[0]) == ["algorithm", "n1", "n2", "m", "reps", "median_ns", "edges_out"]
    # 3x3 cannot hold the default 2*(n1+n2) = 12 edges; reported, not fatal
    assert {(r["algorithm"], r["n1"]) for r in rows} == {(a, n) for a in ("MatrixScan", "SparseWedge") for n in ("8", "16")}
    assert all(int(r["reps"]) == 3 and int(r["median_ns"]) > 0 for r in rows)
    assert "error\t3x3" in err
    assert "slope\tMatrixScan\tn2=6" in err


def test_module_entry_point(matrix_m_file):
    res = subprocess.run(
        [sys.executable, "-m", "biproj", "project", str(matrix_m_file), "--side", "s"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
    assert res.stdout == "4\n0\t1\n0\t2\n1\t2\n1\t3\n"
