import io
import json
import shutil
import subprocess
import sys

import pytest

from rouquier.cli import BadParameterShape, NonCyclotomicParameter, main, parse_params, parse_term
from rouquier.grouprepo import DATA_DIR_ENV, default_data_dir


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def squash(s):
    return "".join(s.split())


def test_all_blocks_text(G4, printed):
    code, out, _ = run("all-blocks", "G4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "No essential hyperplane"
    assert len(lines) == 14
    headings = lines[0::2]
    assert headings[1:] == printed["G4_essential_hyperplanes"]["0"]


def test_all_blocks_json(printed):
    code, out, _ = run("all-blocks", "G4", "--format", "json")
    assert code == 0
    recs = json.loads(out)
    got = [(r["cond"] or [], r["block"]) for r in recs]
    assert got == [tuple(x) for x in printed["G4_all_blocks"]]
    assert any(r["cond"] == [2, -1, -1] for r in recs)
    assert recs[0]["cond"] is None


def test_rouquier_blocks_printed_session(printed):
    ref = printed["G4_rouquier_blocks"]
    code, out, _ = run("rouquier-blocks", "G4", "--params", ref["params"])
    assert code == 0
    idx, labels = out.splitlines()
    assert json.loads(idx) == ref["indices"]
    assert squash(labels) == squash(json.dumps(ref["labels"]))


@pytest.mark.parametrize("argv,blocks", [
    (["--n", "0,0,0"], [[1, 2, 3, 4, 5, 6, 7]]),
    (["--n", "0,2,4"], [[1], [2, 5, 7], [3], [4], [6]]),
    (["--params", "1,x,x"], [[1], [2, 3, 4], [5, 6], [7]]),
    (["--params", "x^2,E3*x^4,E3^2"], [[1, 4, 7], [2], [3], [5], [6]]),
])
def test_rouquier_blocks_variants(argv, blocks):
    code, out, _ = run("rouquier-blocks", "G4", *argv, "--format", "json")
    assert code == 0
    assert json.loads(out)["block"] == blocks


def test_essential_hyperplanes(printed):
    for p in ("0", "2", "3"):
        code, out, _ = run("essential-hyperplanes", "G4", p)
        assert code == 0
        assert set(out.splitlines()) == set(printed["G4_essential_hyperplanes"][p])
    code, out, err = run("essential-hyperplanes", "G4", "5")
    assert code == 1 and out == ""
    assert err.strip() == printed["G4_essential_hyperplanes"]["5"][0]


def test_unknown_group():
    code, _, err = run("all-blocks", "NoSuchGroup")
    assert code == 1
    assert "unknown group" in err and "G4" in err


def test_usage_errors():
    assert run()[0] == 2
    assert run("all-blocks")[0] == 2
    assert run("all-blocks", "G4", "--budget", "0")[0] == 2
    assert run("rouquier-blocks", "G4")[0] == 1
    assert run("rouquier-blocks", "G4", "--n", "1,2")[0] == 1
    assert run("rouquier-blocks", "G4", "--params", "2*x")[0] == 1


def test_certified():
    for g in ("G4", "G6"):
        assert run("all-blocks", g, "--certified")[0] == 0


def test_certified_needs_published_table(tmp_path):
    for name in ("G6", "G7"):
        shutil.copy(default_data_dir() / f"{name}.json", tmp_path)
    doc = json.loads((default_data_dir() / "G4.json").read_text())
    doc["name"] = "G4copy"
    (tmp_path / "G4copy.json").write_text(json.dumps(doc))
    assert run("all-blocks", "G4copy", "--data-dir", str(tmp_path))[0] == 0
    code, _, err = run("all-blocks", "G4copy", "--data-dir", str(tmp_path), "--certified")
    assert code == 1 and "NotCertified" in err


def test_validate():
    code, out, _ = run("validate", "G4")
    assert code == 0
    assert out.splitlines() and all(line.startswith("PASS") for line in out.splitlines())


def test_validate_g7_lists_values():
    code, out, _ = run("validate", "G7")
    assert code == 0
    assert "PASS phi{1,0}: value at 1 = 144" in out
    assert "PASS phi{3,6}: value at 1 = 48" in out


def test_validate_tampered(tmp_path):
    for name in ("G4", "G6", "G7"):
        shutil.copy(default_data_dir() / f"{name}.json", tmp_path)
    doc = json.loads((tmp_path / "G4.json").read_text())
    doc["classes"]["values"][6][1] = 2
    (tmp_path / "G4.json").write_text(json.dumps(doc))
    code, out, _ = run("validate", "G4", "--data-dir", str(tmp_path))
    assert code == 1
    assert "FAIL row orthogonality of the character table" in out
    # other commands refuse the pack
    code, _, err = run("all-blocks", "G4", "--data-dir", str(tmp_path))
    assert code == 1 and "ValidationError" in err


def test_data_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    code, _, err = run("all-blocks", "G4")
    assert code == 1 and "unknown group" in err


def test_show_schur_json_round_trip(G4):
    code, out, _ = run("show-schur", "G4", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [r["char"] for r in rows] == list(G4.labels)
    code, out, _ = run("show-schur", "G4", "--char", "phi{3,2}")
    assert code == 0 and "phi{3,2}:" in out
    assert run("show-schur", "G4", "--char", "nope")[0] == 1


def test_parse_term():
    from fractions import Fraction
    assert parse_term("E3^2*x^2") == (Fraction(2, 3), 2)
    assert parse_term("-x") == (Fraction(1, 2), 1)
    assert parse_term("1") == (0, 0)
    assert parse_term("E(4)^-1*x^(3)") == (Fraction(3, 4), 3)
    with pytest.raises(NonCyclotomicParameter):
        parse_term("3*x")
    with pytest.raises(NonCyclotomicParameter):
        parse_term("y")


def test_parse_params_shapes(G4, G7):
    assert parse_params("1,E3*x,E3^2*x^2", G4) == (0, 1, 2)
    # slot j takes the parameter carrying E3^j, whatever order they are written in
    assert parse_params("E3^2*x^2,E3*x,1", G4) == (0, 1, 2)
    assert parse_params("E3*x^5,1,E3^2", G4) == (0, 5, 0)
    assert parse_params("x", G4) == (1, 0, 0)
    with pytest.raises(BadParameterShape):
        parse_params("1,E3*x,E3*x^2", G4)
    with pytest.raises(BadParameterShape):
        parse_params("1,x", G4)
    # one entry for all three orbits of G7
    assert parse_params("x", G7) == (1, 0, 1, 0, 0, 1, 0, 0)
    assert parse_params("1,-x;1,x,x^2;x,1,1", G7) == (0, 1, 0, 1, 2, 1, 0, 0)
    with pytest.raises(BadParameterShape):
        parse_params("1;1", G7)


@pytest.mark.parametrize("cmd", [
    [sys.executable, "-m", "rouquier"],
    ["rouquier"],
])
def test_entry_points(cmd):
    if cmd[0] == "rouquier" and shutil.which("rouquier") is None:
        pytest.skip("console script not on PATH")
    r = subprocess.run(cmd + ["essential-hyperplanes", "G4", "5"], capture_output=True, text=True)
    assert r.returncode == 1
    assert r.stderr.strip() == "Error, The number p should divide the order of the group"
