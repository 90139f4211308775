import json

import pytest

import splinezeros.harness as harness
from splinezeros import spline_from_document, spline_to_document, zigzag_spline
from splinezeros.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bspline_text_and_eval(capsys):
    code, out, _ = run(capsys, "bspline", "--m", "2", "--eval", "3/2")
    assert code == 0
    assert "B_2(3/2) = 3/4" in out


def test_bspline_json(capsys):
    code, out, _ = run(capsys, "bspline", "--m", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 1
    assert doc["knots"] == ["0", "1", "2"]
    spline_from_document({k: doc[k] for k in ("degree", "knots", "pieces")})


def test_conjecture_a2(capsys):
    code, out, _ = run(capsys, "conjecture", "--vectors", "1,0;1,1;0,1")
    assert code == 0
    assert "|Omega| = 7" in out
    assert "det = 1/64" in out
    assert "unimodular: yes" in out
    assert "invertible: yes" in out


def test_conjecture_b2(capsys):
    code, out, _ = run(capsys, "conjecture", "--vectors", "1,0;1,1;0,1;-1,1")
    assert code == 0
    assert "det = 0" in out
    assert "unimodular: no" in out
    assert "invertible: NO" in out


def test_conjecture_json(capsys):
    code, out, _ = run(capsys, "conjecture", "--vectors", "1;1", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["omega_size"] == 3
    assert doc["determinant"] == "1/4"
    assert doc["invertible"] is True


def test_boxspline_eval(capsys):
    code, out, _ = run(capsys, "boxspline", "--vectors", "1,0;1,1;0,1",
                       "--eval", "1,1")
    assert code == 0
    assert "B_X(1,1) = 1" in out


def test_verify_exit_zero_and_determinism(capsys):
    argv = ["verify", "--kind", "theorem9", "--m", "1", "--knots", "4",
            "--trials", "20", "--seed", "42", "--json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    doc1, doc2 = json.loads(out1), json.loads(out2)
    doc1.pop("elapsed_ms")
    doc2.pop("elapsed_ms")
    assert doc1 == doc2
    assert doc1["violations"] == 0


def test_verify_violation_exit_code(capsys, monkeypatch):
    real = harness.check_zero_bound

    def always_violating(s):
        verdict = real(s)
        return type(verdict)(
            Z=verdict.Z, bound=-1, gross_bound=verdict.gross_bound,
            n=verdict.n, degree=verdict.degree, passed=False,
            report=verdict.report,
        )

    monkeypatch.setattr(harness, "check_zero_bound", always_violating)
    code, out, _ = run(capsys, "verify", "--kind", "theorem9", "--m", "2",
                       "--knots", "3", "--trials", "5", "--seed", "1")
    assert code == 1


def test_zeros_command(capsys, tmp_path):
    path = tmp_path / "spline.json"
    path.write_text(json.dumps(spline_to_document(zigzag_spline(4))))
    code, out, _ = run(capsys, "zeros", "--in", str(path))
    assert code == 0
    assert "Z = 4" in out


def test_zeros_subwindow_via_insertion(capsys, tmp_path):
    path = tmp_path / "spline.json"
    path.write_text(json.dumps(spline_to_document(zigzag_spline(4))))
    code, out, _ = run(capsys, "zeros", "--in", str(path),
                       "--from", "3/4", "--to", "11/4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["Z"] == 2  # sign crossings at 3/2 and 5/2 only
    assert doc["window"] == ["3/4", "11/4"]


def test_zeros_rejects_corrupt_document(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "degree": 1,
        "knots": ["0", "1"],
        "pieces": [["0"], ["1"], ["1"]],  # jump at 0: not C^0
    }))
    code, _, err = run(capsys, "zeros", "--in", str(path))
    assert code == 2
    assert "error:" in err


def test_zeros_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "zeros", "--in", str(tmp_path / "none.json"))
    assert code == 2


def test_zeros_window_outside_knots_is_input_error(capsys, tmp_path):
    path = tmp_path / "spline.json"
    path.write_text(json.dumps(spline_to_document(zigzag_spline(3))))
    code, _, err = run(capsys, "zeros", "--in", str(path),
                       "--from", "-1", "--to", "2")
    assert code == 2
    assert "error:" in err


def test_extend_roundtrip(capsys, tmp_path):
    src = tmp_path / "src.json"
    dst = tmp_path / "ext.json"
    src.write_text(json.dumps({
        "degree": 1,
        "knots": ["0", "1"],
        "pieces": [["1"], ["1"], ["1"]],
    }))
    code, out, _ = run(capsys, "extend", "--in", str(src), "--out", str(dst))
    assert code == 0
    ext = spline_from_document(json.loads(dst.read_text()))
    assert ext.knots == tuple(map(int, (-1, 0, 1, 2)))
    assert ext.pieces[0].is_zero and ext.pieces[-1].is_zero


def test_bad_rational_is_usage_error(capsys):
    code, _, err = run(capsys, "bspline", "--m", "2", "--eval", "x")
    assert code == 2


def test_unknown_kind_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--kind", "bogus", "--m", "1", "--knots", "2",
              "--trials", "1", "--seed", "0"])
    assert exc.value.code == 2
