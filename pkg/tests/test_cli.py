import json
import subprocess
import sys

import pytest

from distdet.cli import bench_rows, main
from distdet.formulas import bicyclic_det
from distdet.graph import from_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="g.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


@pytest.mark.parametrize("text, expected", [
    ("0 1\n1 2\n2 0\n", "2"),
    ("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n", "12"),
    ("0 1\n", "-1"),
])
def test_det(capsys, edge_file, text, expected):
    code, out, _ = run(capsys, "det", edge_file(text))
    assert code == 0 and out.strip() == expected


def test_det_errors(capsys, edge_file):
    code, _, err = run(capsys, "det", edge_file("0 1\n1 1\n"))
    assert code != 0 and "line 2" in err
    code, _, err = run(capsys, "det", edge_file("n=4\n0 1\n2 3\n"))
    assert code != 0 and "disconnected" in err
    code, _, err = run(capsys, "det", "/nonexistent/file")
    assert code != 0


def test_det_writes_dot(capsys, edge_file, tmp_path):
    dot = tmp_path / "g.dot"
    run(capsys, "det", edge_file("0 1\n"), "--dot", str(dot))
    assert "0 -- 1;" in dot.read_text()


@pytest.mark.parametrize("argv, first", [
    (["bicyclic", "3", "3", "1"], "-33"),
    (["tree", "4"], "-12"),
    (["bicyclic", "4", "7", "3"], "0"),
    (["unicyclic", "5", "2"], "44"),
])
def test_formula(capsys, argv, first):
    code, out, _ = run(capsys, "formula", *argv)
    assert code == 0 and out.splitlines()[0] == first


def test_formula_prints_bicyclic_order(capsys):
    _, out, _ = run(capsys, "formula", "bicyclic", "3", "5", "4")
    assert out.splitlines()[1] == "order 11"


def test_formula_bad_arity(capsys):
    code, _, err = run(capsys, "formula", "tree", "3", "4")
    assert code != 0 and "parameter" in err


def test_gen_infinity(capsys):
    code, out, _ = run(capsys, "gen", "infinity", "3", "1", "3")
    assert code == 0
    assert out.splitlines() == ["0 1", "0 2", "1 2", "2 3", "2 4", "3 4"]


def test_gen_gpqn(capsys):
    _, out, _ = run(capsys, "gen", "gpqn", "3", "3", "1")
    assert from_edge_list(out).order == 6


def test_gen_random_bicyclic(capsys):
    argv = ["gen", "random-bicyclic", "5", "7", "--extra", "10", "--seed", "2"]
    _, out, _ = run(capsys, *argv)
    g = from_edge_list(out)
    assert g.order == 21 and len(g.edges) == 22
    _, again, _ = run(capsys, *argv)
    assert again == out


def test_gen_path_single_vertex_keeps_header(capsys):
    _, out, _ = run(capsys, "gen", "path", "1")
    assert from_edge_list(out).order == 1


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "cycle", "2")
    assert code != 0
    with pytest.raises(SystemExit):
        main(["gen", "theta", "3"])


def test_verify_bicyclic(capsys):
    code, out, _ = run(capsys, "verify", "bicyclic", "--seed", "1", "--count", "100",
                       "--max-order", "25")
    report = json.loads(out)
    assert code == 0
    assert report["summary"] == {"total": 100, "mismatches": 0, "seed": 1}


def test_verify_lemma_a0(capsys):
    code, out, _ = run(capsys, "verify", "lemma-a0", "--count", "50")
    report = json.loads(out)
    assert code == 0 and len(report["instances"]) == 50
    assert all(r["match"] for r in report["instances"])
    assert report["summary"]["seed"] == 0


def test_verify_trees(capsys):
    code, out, _ = run(capsys, "verify", "trees", "--seed", "9", "--count", "200",
                       "--max-order", "12")
    assert code == 0 and json.loads(out)["summary"]["mismatches"] == 0


def test_verify_deterministic_bytes(capsys, tmp_path):
    argv = ["verify", "all", "--seed", "4", "--count", "10", "--max-order", "12"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    _, c, _ = run(capsys, *argv, "--jobs", "2")
    assert a == b == c
    assert "micros" not in a


def test_verify_csv_and_timing(capsys, tmp_path):
    csv_path = tmp_path / "r.csv"
    _, out, _ = run(capsys, "verify", "recurrence", "--count", "5", "--max-order", "12",
                    "--csv", str(csv_path), "--timing")
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "suite,index,params,oracle,formula,match,micros"
    assert len(lines) == 6
    assert len(json.loads(out)["timing"]["micros"]) == 5


def test_verify_unknown_suite():
    with pytest.raises(SystemExit):
        main(["verify", "nope"])


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--max-order", "20", "--reps", "1")
    rows = [line.split(",") for line in out.splitlines()]
    assert code == 0 and rows[0][0] == "order"
    orders = [int(r[0]) for r in rows[1:]]
    assert orders == sorted(set(orders)) and orders[-1] == 20
    for order, p, q, n, det, _ in rows[1:]:
        assert int(det) == bicyclic_det(int(p), int(q), int(n))


def test_bench_reps_do_not_change_values():
    one = [r[:5] for r in bench_rows(15, 1)]
    five = [r[:5] for r in bench_rows(15, 5)]
    assert one == five


def test_module_entry_point(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    proc = subprocess.run([sys.executable, "-m", "distdet", "det", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "2"
