import json
import subprocess
import sys

import pytest

from brauer import dataset
from brauer.cli import main

from treegen import LINE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_omega(capsys):
    code, out, _ = run(capsys, "omega", "e8_d24", "--m", "2", "--start", "1", "--n", "12")
    assert code == 0
    assert out == "character: E8[i]\nmodule: simple E8[i]\n"


def test_omega_verbose_and_json(capsys):
    code, out, _ = run(capsys, "omega", "e7_d9", "--m", "2", "--start", "1", "--n", "7", "-v")
    assert code == 0
    assert out.startswith("character: E6[theta]_1\n")
    assert out.count("cover ") == 7
    code, out, _ = run(capsys, "omega", "e7_d9", "--m", "2", "--start", "1", "--n", "7", "--json")
    data = json.loads(out)
    assert data["character"] == {"E6[theta]_1": 1}
    assert len(data["covers"]) == 7


def test_fold_bad_divisor(capsys):
    code, _, err = run(capsys, "fold", "syn_star", "--d", "5")
    assert code == 2
    assert "d does not divide m (5 does not divide 3)" in err


def test_fold(capsys, tmp_path):
    path = tmp_path / "edge.bt"
    path.write_text((dataset.data_root() / "syn_edge" / "tree.bt").read_text())
    code, out, _ = run(capsys, "fold", str(path), "--d", "3")
    assert code == 0
    assert "ORDER x: (l1,0) (l1,1) (l1,2)" in out


def test_dataset_check_all(capsys):
    code, out, _ = run(capsys, "dataset", "check-all")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "id\tkind\tresult\tdetail"
    assert len(lines) == len(dataset.list_ids()) + 1
    assert all(line.split("\t")[2] == "ok" for line in lines[1:])


def test_dataset_check_all_json(capsys):
    code, out, _ = run(capsys, "dataset", "check-all", "--json", "--jobs", "2")
    assert code == 0
    data = json.loads(out)
    assert {r["id"] for r in data} == set(dataset.list_ids())
    assert all(r["ok"] for r in data)


def test_dataset_list(capsys):
    code, out, _ = run(capsys, "dataset", "list")
    assert code == 0
    assert "e7_d14\ttree\t" in out


def test_unknown_command(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert "invalid choice" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "render", "/nonexistent/tree.bt")
    assert code == 2
    assert err.startswith("error: io-error")


def test_malformed_tree(capsys, tmp_path):
    path = tmp_path / "bad.bt"
    path.write_text(LINE.replace("ORDER b: S0 S1", "ORDER b: S0"))
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "order-incomplete" in err


def test_validate_dataset_dir(capsys):
    code, out, _ = run(capsys, "validate", str(dataset.data_root() / "e7_d14" / "tree.bt"))
    assert code == 0
    assert "coxeter-principal\tcoxeter\tpass" in out


def test_validate_negative_fixture(capsys):
    code, out, err = run(capsys, "validate", "bad_e8_d15_swapped")
    assert code == 1
    assert "walk-19\twalk\tfail" in out
    assert "walk-19:" in err


def test_validate_with_cert(capsys, tmp_path):
    tree = tmp_path / "line.bt"
    tree.write_text(LINE.replace("real=1\n", "real=1 deg=1\n", 1))
    cert = tmp_path / "p.cert"
    cert.write_text("CERT p kind=parity tree=line\nD 3\nEND\n")
    code, out, _ = run(capsys, "validate", str(tree), "--cert", str(cert), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["verdicts"][-1]["status"] == "data-missing"


def test_homology(capsys):
    cx = dataset.data_root() / "e7_d14" / "e7.cx"
    code, out, _ = run(capsys, "homology", str(cx))
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    nonzero = {r[0]: r[2] for r in rows if r[1] != "0"}
    assert nonzero == {"7": "E7[i]", "14": "S0"}


def test_homology_wrong_tree(capsys):
    cx = dataset.data_root() / "e7_d14" / "e7.cx"
    code, _, err = run(capsys, "homology", str(cx), "--tree", "e8_d20")
    assert code == 2
    assert "inconsistent-input" in err


def test_decomp_cartan_ext1(capsys, tmp_path):
    path = tmp_path / "line.bt"
    path.write_text(LINE)
    code, out, _ = run(capsys, "decomp", str(path))
    assert out == "character\tS0\tS1\na\t1\t0\nb\t1\t1\nc\t0\t1\n"
    code, out, _ = run(capsys, "cartan", str(path), "--m", "1")
    assert out == "edge\tS0\tS1\nS0\t2\t1\nS1\t1\t2\n"
    code, out, _ = run(capsys, "ext1", str(path), "--m", "1", "--json")
    assert json.loads(out)["matrix"] == [[0, 1], [1, 0]]


def test_decomp_expanded(capsys):
    code, out, _ = run(capsys, "decomp", "syn_star", "--expanded")
    assert code == 0
    assert "x#3\t1\t1\t1" in out


def test_render(capsys):
    code, out, _ = run(capsys, "render", "syn_line", "--format", "dot")
    assert code == 0 and out.startswith("graph")
    code, out, _ = run(capsys, "render", "syn_line")
    assert code == 0 and "a" in out


def test_cartan_symbolic_m(capsys):
    code, _, err = run(capsys, "cartan", "e7_d14", "--m", "0")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "brauer", "omega", "e8_d24", "--m", "2", "--start", "1", "--n", "12"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "character: E8[i]\nmodule: simple E8[i]\n"


@pytest.mark.parametrize("argv", [["--help"], ["omega", "--help"]])
def test_help(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "usage" in out
