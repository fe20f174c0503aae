import json
from pathlib import Path

from joinmeet.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"

PENTAGON_DOC = {
    "elements": ["e", "x", "y", "z", "f"],
    "covers": [["e", "y"], ["y", "x"], ["x", "f"], ["e", "z"], ["z", "f"]],
}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# check


def test_check_pentagon(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "pentagon")
    assert code == 0
    assert "is_modular: False" in out
    assert "pentagon sublattice: {e, x, y, z, f}" in out
    assert "is_pure: False" in out


def test_check_diamond(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "diamond")
    assert code == 0
    assert "is_modular: True" in out
    assert "is_distributive: False" in out
    assert "rank-2 diamond: {e, x, y, z, f}" in out


def test_check_chain(capsys):
    code, out, _ = run(capsys, "check", "--builtin", "chain", "--n", "4")
    assert code == 0
    for line in ("is_modular: True", "is_distributive: True", "is_pure: True"):
        assert line in out


def test_check_lattice_file(tmp_path, capsys):
    path = tmp_path / "lat.json"
    path.write_text(json.dumps(PENTAGON_DOC))
    code, out, _ = run(capsys, "check", "--input", str(path), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["is_modular"] is False
    assert doc["config"]["command"] == "check"
    assert "timing_seconds" in doc


def test_check_rejects_non_lattice(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"elements": ["a", "b", "c"], "covers": [["a", "b"], ["a", "c"]]}))
    code, _, err = run(capsys, "check", "--input", str(path))
    assert code == 2
    assert "error" in err


def test_check_missing_file(capsys):
    code, _, err = run(capsys, "check", "--input", "/nonexistent/lat.json")
    assert code == 2


def test_builtin_requires_n(capsys):
    code, _, err = run(capsys, "check", "--builtin", "boolean")
    assert code == 2
    assert "--n" in err


# ---------------------------------------------------------------------------
# ideal / colon


def test_ideal_diamond(capsys):
    code, out, _ = run(capsys, "ideal", "--builtin", "diamond")
    assert code == 0
    assert "generators (3):" in out
    assert "x*y - e*f" in out


def test_colon_pentagon_example(capsys):
    code, out, _ = run(capsys, "colon", "--builtin", "pentagon", "--j", "x", "--by", "y")
    assert code == 0
    assert "degree-1 part: (x, z)" in out
    assert "generated by variables: yes {x, z}" in out


def test_colon_nonlinear_case(capsys):
    code, out, _ = run(capsys, "colon", "--builtin", "pentagon", "--j", "", "--by", "e")
    assert code == 0
    assert "NOT generated by linear forms" in out


def test_colon_json(capsys):
    code, out, _ = run(
        capsys, "colon", "--builtin", "diamond", "--j", "", "--by", "x",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["linear_generated"] is True
    assert doc["result"]["variable_generated"] is False
    assert doc["result"]["degree1"] == ["z - y"]  # monic form of y - z


def test_colon_bad_polynomial(capsys):
    code, _, err = run(capsys, "colon", "--builtin", "pentagon", "--j", "x", "--by", "q + 1")
    assert code == 2


# ---------------------------------------------------------------------------
# posetideals


def test_posetideals_boolean2_with_verify(capsys):
    code, out, _ = run(capsys, "posetideals", "--builtin", "boolean", "--n", "2", "--verify")
    assert code == 0
    assert "6 poset ideals:" in out
    assert "Koszul filtration: pass" in out


def test_posetideals_pentagon_verify_fails(capsys):
    code, out, _ = run(capsys, "posetideals", "--builtin", "pentagon", "--verify")
    assert code == 1
    assert "Koszul filtration: fail" in out


# ---------------------------------------------------------------------------
# filtration verify / search


def test_verify_shipped_pentagon_family(capsys):
    code, out, _ = run(
        capsys, "filtration", "verify", "--builtin", "pentagon", str(DATA / "pentagon.filt")
    )
    assert code == 0
    assert "verdict: pass" in out
    assert out.count("J:I = member") == 7


def test_verify_shipped_diamond_family(capsys):
    code, out, _ = run(
        capsys, "filtration", "verify", "--builtin", "diamond", str(DATA / "diamond.filt")
    )
    assert code == 0
    assert out.count("J:I = member") == 8


def test_verify_failing_family(tmp_path, capsys):
    path = tmp_path / "bad.filt"
    path.write_text(json.dumps({"ideals": [[], "m"]}))
    code, out, _ = run(
        capsys, "filtration", "verify", "--builtin", "pentagon", str(path)
    )
    assert code == 1
    assert "verdict: fail" in out


def test_search_diamond_none(capsys):
    code, out, _ = run(capsys, "filtration", "search", "--builtin", "diamond")
    assert code == 1
    assert "none (certified, 32 subsets examined)" in out


def test_search_round_trip(tmp_path, capsys):
    out_path = tmp_path / "found.filt"
    code, out, _ = run(
        capsys, "filtration", "search", "--builtin", "pentagon",
        "--out", str(out_path),
    )
    assert code == 0
    assert "replay verification: pass" in out
    code, out, _ = run(
        capsys, "filtration", "verify", "--builtin", "pentagon", str(out_path)
    )
    assert code == 0
    assert "verdict: pass" in out


def test_search_json_carries_filtration_document(capsys):
    code, out, _ = run(
        capsys, "filtration", "search", "--builtin", "pentagon", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["result"]["found"] is True
    assert doc["result"]["subsets_examined"] == 32
    assert isinstance(doc["result"]["filtration"]["ideals"], list)


def test_search_cap_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("JOINMEET_SEARCH_CAP", "3")
    code, _, err = run(capsys, "filtration", "search", "--builtin", "pentagon")
    assert code == 2
    assert "cap" in err


# ---------------------------------------------------------------------------
# prime mode stamping


def test_prime_mode_is_stamped(capsys):
    code, out, _ = run(
        capsys, "check", "--builtin", "diamond", "--field", "prime", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert "unverified" in doc["arithmetic"]
    code, out, _ = run(capsys, "colon", "--builtin", "diamond", "--j", "", "--by", "x",
                       "--field", "prime")
    assert "unverified arithmetic" in out
