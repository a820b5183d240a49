import json

import pytest

from codelattice.cli import main
from codelattice.gf2core import BinaryMatrix
from codelattice.matio import data_path, read_matrix, write_f2_matrix, write_z_matrix
from codelattice.zlattice import Lattice


def run(capsys, argv):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_code_info_golay_text(capsys):
    code, out, _ = run(capsys, ["code-info", data_path("golay24.txt")])
    assert code == 0
    assert "min distance d = 8" in out
    assert "kissing kappa0 = 759" in out


def test_code_info_golay_json(capsys, tmp_path):
    dest = str(tmp_path / "info.json")
    code, out, _ = run(
        capsys, ["code-info", data_path("golay24.txt"), "--format", "json", "--out", dest]
    )
    assert code == 0 and out == ""
    rep = json.loads(open(dest).read())
    assert (rep["n"], rep["k"], rep["d"], rep["kappa0"]) == (24, 12, 8, 759)
    assert len(rep["min_weight_sample"]) == 5


def test_exit_2_on_malformed_and_missing_input(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("17 banana F2\n")
    code, _, err = run(capsys, ["code-info", str(bad)])
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, ["code-info", str(tmp_path / "nope.txt")])
    assert code == 2


def test_exit_3_on_oversized_sweep(capsys, tmp_path):
    p = str(tmp_path / "id29.txt")
    write_f2_matrix(p, BinaryMatrix.identity(29))
    code, _, err = run(capsys, ["code-info", p])
    assert code == 3 and "error:" in err


def test_exit_4_on_tower_violation(capsys, tmp_path):
    write_f2_matrix(str(tmp_path / "k0.txt"), BinaryMatrix.identity(4))
    write_f2_matrix(
        str(tmp_path / "k1.txt"), BinaryMatrix.from_rows([[1], [0], [0], [0]])
    )
    man = tmp_path / "tower.txt"
    man.write_text("tower 4 2\nk0.txt\nk1.txt\n")
    code, _, err = run(capsys, ["construct", str(man), "--construction", "d"])
    assert code == 4 and "error:" in err


def test_exit_5_on_budget(capsys, tmp_path):
    p = str(tmp_path / "l.txt")
    cols = [
        (2, 0, 0, 0),
        (0, 2, 0, 0),
        (0, 0, 2, 0),
        (0, 0, 0, 2),
    ]
    write_z_matrix(p, 4, cols)
    code, _, err = run(capsys, ["lattice-analyze", p, "--budget", "1"])
    assert code == 5 and "error:" in err


def test_exit_1_on_hypotheses_fail_with_report(capsys):
    code, _, err = run(capsys, ["verify", "thm24", "--m", "3"])
    assert code == 1
    assert "below minimum" in err
    assert '"theorem": "thm24"' in err  # the failing report lands on stderr


def test_usage_errors_exit_2(capsys):
    for argv in (
        ["verify", "golay-lp", "--p", "3"],
        ["verify", "cor23", "--m", "10"],
        ["verify", "cor25", "--m", "0"],
        ["verify", "cor25", "--p", "1/2"],
        ["lattice-analyze", "x.txt", "--budget", "0"],
        ["lattice-analyze", "x.txt", "--delta", "1"],
        ["verify", "nope"],
        [],
    ):
        with pytest.raises(SystemExit) as ei:
            main(argv)
        assert ei.value.code == 2
        capsys.readouterr()


def test_construct_a_round_trip(capsys, tmp_path):
    src = str(tmp_path / "rep3.txt")
    write_f2_matrix(src, BinaryMatrix.from_rows([[1], [1], [1]]))
    dest = str(tmp_path / "lattice.txt")
    code, out, _ = run(
        capsys, ["construct", src, "--construction", "a", "--out", dest]
    )
    assert code == 0
    assert "determinant: 4" in out
    assert "rank: 3" in out
    rows, k, cols = read_matrix(dest)
    assert (rows, k) == (3, 3)
    assert Lattice.from_generators(rows, cols).basis == ((1, 1, 1), (0, 2, 0), (0, 0, 2))
    # without --out the matrix goes to stdout and the report to stderr
    code, out, err = run(capsys, ["construct", src, "--construction", "a"])
    assert code == 0
    assert out.startswith("3 3 Z\n")
    assert "# determinant: 4" in err


def test_construct_json_includes_basis(capsys, tmp_path):
    src = str(tmp_path / "rep3.txt")
    write_f2_matrix(src, BinaryMatrix.from_rows([[1], [1], [1]]))
    code, out, _ = run(
        capsys, ["construct", src, "--construction", "simplified-d", "--format", "json"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["construction"] == "simplified-d"
    assert rep["basis"] == [[1, 1, 1]]
    assert rep["determinant"] == "sqrt(3)"


def test_construct_d_bar_reports_verdict(capsys):
    man = data_path("tower_nonclosed.manifest.txt")
    code, out, _ = run(
        capsys, ["construct", man, "--construction", "d-bar", "--format", "json"]
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["is_lattice"] is False
    assert rep["witness"] == [0, 0, 0, 2]
    assert rep["n"] == 4 and rep["rank"] == 4


def test_construct_d_special_from_manifest(capsys, tmp_path):
    # blocks: K0 (3 cols), middle c1 (weight 4), Ka (1 col), n = 5
    write_f2_matrix(
        str(tmp_path / "k0.txt"),
        BinaryMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, 0]]),
    )
    write_f2_matrix(
        str(tmp_path / "c1.txt"),
        BinaryMatrix.from_rows([[1], [1], [1], [1], [0]]),
    )
    write_f2_matrix(
        str(tmp_path / "ka.txt"),
        BinaryMatrix.from_rows([[0], [0], [0], [0], [1]]),
    )
    man = tmp_path / "tower.txt"
    man.write_text("tower 5 3\nk0.txt\nc1.txt\nka.txt\n")
    code, out, _ = run(
        capsys,
        ["construct", str(man), "--construction", "d-special", "--a", "2", "--format", "json"],
    )
    assert code == 0
    rep = json.loads(out)
    assert rep["determinant"] == "128"
    # wrong --a is a usage-level parse error
    code, _, err = run(
        capsys, ["construct", str(man), "--construction", "d-special", "--a", "3"]
    )
    assert code == 2


def test_verify_cor23_deterministic_output(capsys):
    code1, out1, _ = run(capsys, ["verify", "cor23", "--no-timing"])
    code2, out2, _ = run(capsys, ["verify", "cor23", "--no-timing"])
    assert code1 == code2 == 0
    assert out1 == out2
    rep = json.loads(out1)
    assert rep["exact_values"]["d"] == 16
    assert "runtime_ms" not in rep


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, ["verify", "cor25", "--format", "text"])
    assert code == 0
    assert out.splitlines()[-1].startswith("verdict: PASS")
    assert "[pass] code parameters are exactly [18, 3, 9]" in out


def test_verify_dbar_schur_with_tower_flag(capsys):
    man = data_path("tower_nonclosed.manifest.txt")
    code, out, _ = run(capsys, ["verify", "dbar-schur", "--tower", man])
    assert code == 0
    rep = json.loads(out)
    assert rep["exact_values"] == {"schur_closed": False, "is_lattice": False}


def test_verify_golay_lp(capsys):
    code, out, _ = run(capsys, ["verify", "golay-lp", "--p", "1"])
    assert code == 0
    rep = json.loads(out)
    assert rep["exact_values"]["witness_l1"] == 4


def test_verify_thm22(capsys):
    code, out, _ = run(capsys, ["verify", "thm22"])
    assert code == 0
    rep = json.loads(out)
    assert rep["theorem"] == "thm22"
    assert all(h["pass"] for h in rep["hypotheses"])


def test_lattice_analyze_z1(capsys, tmp_path):
    p = str(tmp_path / "z1.txt")
    write_z_matrix(p, 1, [(1,)])
    code, out, _ = run(capsys, ["lattice-analyze", p])
    assert code == 0
    assert "lambda1^2 = 1" in out
    assert "kappa2 = 2" in out


def test_lattice_analyze_2z4_json(capsys, tmp_path):
    p = str(tmp_path / "l.txt")
    write_z_matrix(p, 4, [(2, 0, 0, 0), (0, 2, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2)])
    code, out, _ = run(capsys, ["lattice-analyze", p, "--format", "json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["lambda1_sq"] == 4
    assert rep["kissing"] == 8
    assert len(rep["vectors"]) == 8
    # an F2 file is a usage-level error here
    f2 = str(tmp_path / "f2.txt")
    write_f2_matrix(f2, BinaryMatrix.identity(2))
    code, _, err = run(capsys, ["lattice-analyze", f2])
    assert code == 2


def test_custom_delta_accepted(capsys, tmp_path):
    p = str(tmp_path / "l.txt")
    write_z_matrix(p, 2, [(7, 3), (11, 5)])
    code1, out1, _ = run(capsys, ["lattice-analyze", p, "--format", "json"])
    code2, out2, _ = run(
        capsys, ["lattice-analyze", p, "--format", "json", "--delta", "3/4"]
    )
    assert code1 == code2 == 0
    # same exact answers whatever the reduction quality
    assert json.loads(out1) == json.loads(out2)