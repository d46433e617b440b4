import json

import pytest

from macdonald.cli import main, parse_spec, UsageError
from macdonald.hecke import e_poly
from macdonald.qt import UT, dumps, loads
from macdonald.tableaux import p_tableaux


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_e_latex(capsys):
    code, out, _ = run(capsys, "e", "--mu", "0,1", "--n", "2", "--format", "latex")
    assert code == 0
    assert out == r"x_2 + \frac{1-t}{1-qt}x_1"


def test_json_output_round_trips(capsys):
    code, out, _ = run(capsys, "p-tab", "--shape", "2,1", "--n", "3", "--format", "json")
    assert code == 0
    assert loads(out) == p_tableaux((2, 1), 3)
    assert dumps(loads(out)) == out


def test_p_tab_at_q_equals_t_is_schur(capsys):
    _, out, _ = run(capsys, "p-tab", "--shape", "2", "--n", "2", "--spec", "q=t")
    _, schur, _ = run(capsys, "schur", "--shape", "2", "--n", "2")
    assert out == schur == "x_2^{2} + x_1x_2 + x_1^{2}"


def test_p_wcf_matches_p_tab(capsys):
    _, a, _ = run(capsys, "p-wcf", "--shape", "2,1", "--n", "3", "--format", "json")
    _, b, _ = run(capsys, "p-tab", "--shape", "2,1", "--n", "3", "--format", "json")
    assert a == b


def test_hl_and_a(capsys):
    assert run(capsys, "hl", "--shape", "1,1", "--n", "2")[1] == "x_1x_2"
    code, out, _ = run(capsys, "a", "--mu", "1,0", "--format", "json")
    assert code == 0 and loads(out).n == 2


def test_parse_spec():
    assert parse_spec("q=0,t=0") == {"uq": 0, "ut": 0}
    assert parse_spec("q=t") == {"uq": UT}
    assert parse_spec("t=1/4")["ut"] == pytest.approx(0.5)
    for bad in ("q", "x=1", "t=2", "q=abc"):
        with pytest.raises(UsageError):
            parse_spec(bad)


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["e", "--mu", "0,1", "--bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2
    assert run(capsys, "p-tab", "--shape", "2", "--n", "2", "--spec", "t=3")[0] == 2
    assert run(capsys, "affine", "orbit")[0] == 2


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "p-tab", "--shape", "1,2", "--n", "2")
    assert code == 1 and "MalformedPartition" in err
    assert run(capsys, "zeta", "--q", "2", "--numer", "1,1", "--n", "2")[0] == 1
    assert run(capsys, "e", "--mu", "0,1", "--n", "3")[0] == 1
    assert run(capsys, "cohomology", "--g", "4", "--n", "1")[0] == 1
    assert run(capsys, "affine", "path", "--from", "E8", "--to", "D")[0] == 1


def test_affine(capsys):
    code, out, _ = run(capsys, "affine", "orbit", "--vector", "1e1+1d2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["orbit"] == "O3" and data["images"]["s0"] == "-1e1+3d2"
    data = json.loads(run(capsys, "affine", "poset", "--format", "json")[1])
    assert len(data["edges"]) == 15
    assert run(capsys, "affine", "poset", "--format", "dot")[1].startswith("digraph")
    data = json.loads(run(capsys, "affine", "path", "--from", "CvC", "--to", "B", "--format", "json")[1])
    assert data["path"][0] == "CvC" and data["path"][-1] == "B"


def test_clifford(capsys, tmp_path):
    code, out, _ = run(capsys, "clifford", "--ys", "2,0;0,2", "--format", "json")
    assert code == 0 and json.loads(out)["point"] == {"re": "1", "im": "1"}
    svg = tmp_path / "c.svg"
    code, out, _ = run(capsys, "clifford", "--ys", "2,0;0,2;1,3", "--mode", "verify", "--svg", str(svg))
    assert code == 0 and "status: pass" in out
    assert svg.read_text().startswith("<svg")
    code, out, _ = run(capsys, "clifford", "--ys", "3,1;-2,4;5,-3;1,6", "--mode", "construct")
    assert code == 0 and out.startswith("point")
    assert run(capsys, "clifford", "--ys", "1,0;2,0")[0] == 1


def test_zeta(capsys):
    code, out, _ = run(capsys, "zeta", "--q", "2", "--numer", "1,0,2", "--n", "2", "--emit", "counts",
                       "--format", "json")
    assert code == 0 and json.loads(out)["counts"] == [9, 45, 81, 153]
    data = json.loads(run(capsys, "zeta", "--q", "2", "--numer", "1,0,2", "--n", "2", "--format", "json")[1])
    assert data["denominator"]["0"] == ["1", "-1"]
    assert run(capsys, "zeta", "--q", "2", "--numer", "1,0,2", "--n", "2", "--emit", "rh")[0] == 0
    assert run(capsys, "zeta", "--q", "2", "--numer", "1,0,2", "--n", "3", "--emit", "fe")[0] == 0
    code, out, _ = run(capsys, "zeta", "--q", "7", "--numer", "1,0,0,0,49", "--n", "2", "--emit", "fe",
                       "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["status"] == "fail" and data["sign_flipped_prefactor"] == "pass"


def test_cohomology(capsys):
    assert run(capsys, "cohomology", "--g", "1", "--n", "2")[1] == "1 2 2 2 1"
    data = json.loads(run(capsys, "cohomology", "--g", "2", "--n", "2", "--zeta", "7,1,0,0,0,49",
                          "--format", "json")[1])
    assert data["betti"] == [1, 4, 7, 4, 1]
    assert run(capsys, "cohomology", "--g", "1", "--n", "2", "--zeta", "7,1,0,0,0,49")[0] == 1
    assert "2*s" in run(capsys, "cohomology", "--g", "1", "--n", "1", "--emit", "poincare")[1]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "wcf", "--max-weight", "4", "--n", "3")
    assert code == 0 and out.splitlines()[-1] == "pass"
    code, out, _ = run(capsys, "verify", "--suite", "clifford", "--count", "3", "--seed", "7",
                       "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["status"] == "pass" and report["suites"][0]["checked"] == 12
    assert run(capsys, "verify", "--suite", "zeta")[0] == 0
    assert run(capsys, "verify", "--suite", "cohomology")[0] == 0


def test_verify_is_deterministic(capsys):
    a = json.loads(run(capsys, "verify", "--suite", "clifford", "--count", "2", "--format", "json")[1])
    b = json.loads(run(capsys, "verify", "--suite", "clifford", "--count", "2", "--format", "json")[1])
    for r in (a, b):
        for s in r["suites"]:
            s.pop("seconds")
    assert a == b


def test_cache_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MACDONALD_CACHE_DIR", str(tmp_path / "cache"))
    assert run(capsys, "e", "--mu", "0,2,1")[0] == 0
    cached = json.loads((tmp_path / "cache" / "emem.json").read_text())
    assert "0,2,1" in cached
    assert loads(json.dumps(cached["0,2,1"])) == e_poly((0, 2, 1))
    assert run(capsys, "e", "--mu", "0,2,1")[0] == 0


def test_verbose_logs_to_stderr(capsys):
    code, out, err = run(capsys, "cohomology", "--g", "1", "--n", "1", "-v")
    assert code == 0 and out == "1 2 1" and "done" in err
