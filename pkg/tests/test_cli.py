import json

import pytest

from cli.main import run
from designs.constructions import affine_group
from utils.permset_store import load_permset


def test_bounds_text(capsys):
    assert run(["bounds", "--n", "10", "--t", "2"]) == 0
    out = capsys.readouterr().out
    assert "sm bound: 90" in out
    assert "cor2 bound (t=2): 82" in out


def test_bounds_json(capsys):
    assert run(["bounds", "--n", "5", "--t", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"n": 5, "t": 3, "sm": 60, "cor2_t2": 17, "sm_beats_cor2": True}


def test_verify_json(capsys, data_dir):
    assert run(["verify", str(data_dir / "affine5.perms"), "--t", "2", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert list(report) == [
        "n", "size", "t", "frequencies", "moments", "dual_frequencies", "criteria", "bounds", "transitivity",
    ]
    assert report["criteria"] == {"moments": True, "dual": True, "tcrit": True}
    assert report["bounds"]["sm"] == 20
    assert report["transitivity"] == {"max_t": 2, "sharp": True, "is_group": True}


def test_verify_output_does_not_depend_on_workers(capsys, data_dir):
    path = str(data_dir / "affine5.perms")
    run(["verify", path, "--format", "json", "--workers", "1"])
    first = capsys.readouterr().out
    run(["verify", path, "--format", "json", "--workers", "2"])
    assert capsys.readouterr().out == first


def test_verify_strict(capsys, data_dir):
    path = str(data_dir / "paper_n5.perms")
    assert run(["verify", path, "--t", "2"]) == 0
    assert run(["verify", path, "--t", "2", "--strict"]) == 1
    assert run(["verify", path, "--t", "1", "--strict"]) == 0
    assert "criteria: moments=True" in capsys.readouterr().out


def test_freq(capsys, data_dir):
    assert run(["freq", str(data_dir / "paper_n5.perms")]) == 0
    out = capsys.readouterr().out
    assert "f_0 = 1/5" in out
    assert "f_5 = 4/5" in out


def test_charlier(capsys):
    assert run(["charlier", "--k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "x^2 - 3x + 1"
    assert run(["charlier", "--k", "1", "--n", "4", "--reversed", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["coefficients"] == [3, -1]
    assert run(["charlier", "--k", "1", "--reversed"]) == 2


def test_orthogonality(capsys):
    assert run(["orthogonality", "--n", "6", "--strict"]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_construct_to_file(tmp_path):
    out = tmp_path / "affine5.perms"
    assert run(["construct", "affine", "--q", "5", "--out", str(out)]) == 0
    assert load_permset(out) == affine_group(5)


def test_construct_needs_q(capsys):
    assert run(["construct", "pgl2"]) == 2
    assert "needs --q" in capsys.readouterr().err


def test_search_certificate(capsys):
    assert run(["search", "min-design", "--n", "3", "--t", "2", "--max-size", "5"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["status"] == "exhausted"
    assert cert["permutations"] is None
    assert run(["search", "sharp", "--n", "4", "--t", "1"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "found"


def test_convert(capsys, data_dir, tmp_path):
    assert run(["convert", "to-perms", str(data_dir / "z3_latin.txt")]) == 0
    assert capsys.readouterr().out == "n=3\n123\n231\n312\n"
    assert run(["convert", "to-latin", str(data_dir / "paper_n5.perms")]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "1 2 3 4 5"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "/nonexistent/set.perms"],
        ["frobnicate"],
        ["bounds", "--n", "3", "--t", "5"],
    ],
)
def test_errors_exit_2(argv):
    assert run(argv) == 2
