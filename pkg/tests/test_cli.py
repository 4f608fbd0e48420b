import json
from fractions import Fraction

import pytest

from conftest import K3_A, K3_B
from jkpencil.cli import main
from jkpencil.cli.generate import parse_block_spec
from jkpencil.cli.io import parse_points, parse_role
from jkpencil.errors import InputError


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """No config.yaml or .env from the repository leaks into CLI runs."""
    monkeypatch.chdir(tmp_path)
    for key in ("JKPENCIL_SAMPLING__SEED", "JKPENCIL_OUTPUT__FORMAT"):
        monkeypatch.delenv(key, raising=False)
    return tmp_path


def write_json(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    return write_json(tmp_path / "k3.json", {"A": K3_A, "B": K3_B})


@pytest.fixture
def so3_file(tmp_path):
    return write_json(tmp_path / "so3.json", {
        "A": {"n": 3, "entries": {"1,2": "x3", "2,3": "x1", "1,3": "-x2"}},
        "B": {"n": 3, "entries": {"1,2": "1"}},
    })


@pytest.fixture
def so3_family_file(tmp_path):
    return write_json(tmp_path / "family.json", {"n": 3, "members": [
        {"name": "C", "f": "x1^2 + x2^2 + x3^2", "role": "casimir(0)"},
        {"name": "z", "f": "x3", "role": "casimir(inf)"},
    ]})


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


# linear-algebra commands

def test_invariants_of_printed_example(capsys, k3_file):
    code, report = run_json(capsys, "invariants", k3_file)
    assert code == 0
    assert report["kronecker"] == [3]
    assert report["rank"] == 4
    assert report["charpoly"] == "1"
    assert report["eigenvalues"] == []


def test_core_and_mantle(capsys, k3_file):
    code, core = run_json(capsys, "core", k3_file)
    assert code == 0
    assert core["basis"] == [["0", "0", "1", "0", "0"], ["0", "0", "0", "1", "0"], ["0", "0", "0", "0", "1"]]
    code, mantle = run_json(capsys, "mantle", k3_file)
    assert mantle == core


def test_admissible_exit_codes(capsys, tmp_path, k3_file):
    good = write_json(tmp_path / "core.json", {"ambient": 5, "basis": [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]})
    bad = write_json(tmp_path / "e1.json", {"ambient": 5, "basis": [[1, 0, 0, 0, 0]]})
    assert run(capsys, "admissible", k3_file, good)[0] == 0
    code, report = run_json(capsys, "admissible", k3_file, bad)
    assert code == 4
    assert report["admissible"] is False
    assert report["witness"] is not None


def test_obstruct_fails_with_exit_code_4(capsys, tmp_path, k3_file):
    vector = write_json(tmp_path / "v.json", {"vector": [0, 0, 0, 1, 0]})
    code, report = run_json(capsys, "obstruct", k3_file, vector)
    assert code == 4
    assert report["verdict"] == "FAIL"
    assert [s["in_image"] for s in report["samples"]] == [True, False, False, True]


def test_obstruct_with_explicit_parameters(capsys, tmp_path, k3_file):
    vector = write_json(tmp_path / "v.json", {"vector": [1, 0, 0, 0, 0]})
    code, report = run_json(capsys, "obstruct", k3_file, vector, "--lambda", "1/2", "inf")
    assert code == 0
    assert [s["lambda"] for s in report["samples"]] == ["1/2", "inf"]


def test_reduce_by_core(capsys, tmp_path):
    target = str(tmp_path / "mixed.json")
    assert run(capsys, "gen", "--blocks", "J:2:2,K:3", "--identity", "--output", target)[0] == 0
    core = write_json(tmp_path / "core.json", {"ambient": 9, "basis": [
        [0, 0, 0, 0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 0, 0, 0, 1]]})
    code, report = run_json(capsys, "reduce", target, core)
    assert code == 0
    assert report["reduced"]["n"] == 4
    assert len(report["complement"]["basis"]) == 7
    assert len(report["lift"]) == 4


def test_reduce_rejects_non_admissible_subspace(capsys, tmp_path, k3_file):
    e1 = write_json(tmp_path / "e1.json", {"ambient": 5, "basis": [[1, 0, 0, 0, 0]]})
    code, _, err = run(capsys, "reduce", k3_file, e1)
    assert code == 4
    assert "admissible" in err


def test_complete_mixed_sum(capsys, tmp_path):
    target = str(tmp_path / "mixed.json")
    assert run(capsys, "gen", "--blocks", "J:2:2,K:3", "--identity", "--output", target)[0] == 0
    code, trace = run_json(capsys, "complete", target)
    assert code == 0
    assert trace["dim"] == 5
    assert [s["eigenvalue"] for s in trace["steps"]] == ["2", "2"]


def test_annihilators(capsys, k3_file):
    code, report = run_json(capsys, "annihilators", k3_file)
    assert code == 0
    assert report["core_annihilator_is_common_image"] is True


# generator

def test_gen_is_deterministic(capsys):
    first = run(capsys, "gen", "--blocks", "J:2:2,K:3", "--congruence-seed", "7")
    second = run(capsys, "gen", "--blocks", "J:2:2,K:3", "--congruence-seed", "7")
    assert first[0] == 0
    assert first[1] == second[1]
    payload = json.loads(first[1])
    assert payload["invariants"]["kronecker"] == [3]
    assert payload["invariants"]["jordan"] == [{"eig": "2", "halfsizes": [2]}]


def test_gen_round_trips_through_invariants(capsys, tmp_path):
    target = str(tmp_path / "pencil.json")
    code, written = run_json(capsys, "gen", "--blocks", "J:inf:1,K:2,J:-1/2:2", "--output", target)
    assert code == 0
    code, report = run_json(capsys, "invariants", target)
    assert code == 0
    for key in ("n", "rank", "kronecker", "jordan"):
        assert report[key] == written["invariants"][key]


def test_gen_identity_reproduces_printed_example(capsys):
    code, payload = run_json(capsys, "gen", "--blocks", "K:3", "--identity")
    assert code == 0
    assert payload["A"] == [[str(a) for a in row] for row in K3_A]
    assert payload["B"] == [[str(b) for b in row] for row in K3_B]


def test_parse_block_spec():
    specs = parse_block_spec("J:2:4, K:3, J:inf:1")
    assert [str(s) for s in specs] == ["J:2:4", "K:3", "J:inf:1"]
    assert sum(s.dim for s in specs) == 8 + 5 + 2
    with pytest.raises(InputError):
        parse_block_spec("Q:1")


# input and structural errors

def test_missing_file_is_an_input_error(capsys):
    code, _, err = run(capsys, "invariants", "nowhere.json")
    assert code == 2
    assert "error" in err


def test_malformed_json_is_an_input_error(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{\"A\": [[0, 1], [-1, 0]", encoding="utf-8")
    assert run(capsys, "invariants", str(broken))[0] == 2


def test_bad_rational_is_an_input_error(capsys, tmp_path):
    path = write_json(tmp_path / "p.json", {"A": [["0", "1/0"], ["-1", "0"]], "B": [[0, 0], [0, 0]]})
    assert run(capsys, "invariants", path)[0] == 2


def test_non_skew_pencil_is_a_structural_error(capsys, tmp_path):
    path = write_json(tmp_path / "p.json", {"A": [[0, 1], [1, 0]], "B": [[0, 0], [0, 0]]})
    assert run(capsys, "invariants", path)[0] == 3


def test_bad_block_spec_exits_with_input_error(capsys):
    assert run(capsys, "gen", "--blocks", "J:2")[0] == 2


def test_missing_explicit_config(capsys, k3_file):
    assert run(capsys, "invariants", k3_file, "--config", "absent.yaml")[0] == 2


def test_parse_points_and_roles():
    assert parse_points("1,2,3; 0,1/2,1", 3)[1] == (0, Fraction(1, 2), 1)
    with pytest.raises(InputError):
        parse_points("1,2", 3)
    assert str(parse_role("casimir(inf)")) == "casimir(inf)"
    with pytest.raises(InputError):
        parse_role("momentum")


# poisson commands

def test_poisson_check_and_compat(capsys, so3_file):
    code, report = run_json(capsys, "poisson", "check", so3_file)
    assert code == 0
    assert report == {"passed": True, "A_poisson": True, "B_poisson": True, "compatible": True}
    assert run(capsys, "poisson", "compat", so3_file)[0] == 0


def test_poisson_check_reports_jacobi_failure(capsys, tmp_path):
    path = write_json(tmp_path / "cubic.json", {
        "A": {"n": 3, "entries": {"1,2": "1", "2,3": "x2^3"}},
        "B": {"n": 3, "entries": {"1,2": "1"}},
    })
    code, report = run_json(capsys, "poisson", "check", path)
    assert code == 4
    assert report["A_poisson"] is False
    code, report = run_json(capsys, "poisson", "compat", path)
    assert code == 4
    assert report["witness"]


def test_poisson_guardrail_is_a_structural_error(capsys, tmp_path):
    path = write_json(tmp_path / "cubic.json", {
        "A": {"n": 3, "entries": {"1,2": "1", "2,3": "x2^3"}},
        "B": {"n": 3, "entries": {"1,2": "1"}},
    })
    assert run(capsys, "poisson", "check", path, "--max-degree", "2")[0] == 3


def test_poisson_casimir(capsys, so3_file):
    code, report = run_json(capsys, "poisson", "casimir", so3_file, "--function", "x3", "--alpha", "inf")
    assert code == 0
    assert report["casimir"] is True
    code, report = run_json(capsys, "poisson", "casimir", so3_file, "--function", "x1")
    assert code == 4
    assert report["witness"]


def test_poisson_standard_report(capsys, so3_file, so3_family_file):
    code, report = run_json(
        capsys, "poisson", "standard-report", so3_file, so3_family_file, "--points", "1,2,3;2,-1,1", "--complete")
    assert code == 0
    assert report["passed"] is True
    assert report["complete"] is True
    assert [p["N"] for p in report["points"]] == [2, 2]
    assert report["points"][0]["completion_dim"] == 2


def test_poisson_completeness_with_generated_points(capsys, so3_file, so3_family_file):
    code, report = run_json(
        capsys, "poisson", "completeness", so3_file, so3_family_file, "--points", "4", "--seed", "3", "--workers", "2")
    assert code == 0
    assert len(report["points"]) == 4


def test_poisson_bi_involution_failure(capsys, tmp_path, so3_file):
    family = write_json(tmp_path / "coords.json", {"n": 3, "members": [
        {"name": "x", "f": "x1", "role": "extension"},
        {"name": "y", "f": "x2", "role": "extension"},
    ]})
    code, report = run_json(capsys, "poisson", "bi-involution", so3_file, family)
    assert code == 4
    assert len(report["failures"]) == 2


def test_text_format(capsys, k3_file):
    code, out, _ = run(capsys, "invariants", k3_file, "--format", "text")
    assert code == 0
    assert "kronecker" in out


def test_gen_infinite_eigenvalue_block(capsys):
    code, payload = run_json(capsys, "gen", "--blocks", "J:inf:1", "--identity")
    assert code == 0
    assert payload["A"] == [["0", "1"], ["-1", "0"]]
    assert payload["B"] == [["0", "0"], ["0", "0"]]
    assert payload["invariants"]["jordan"] == [{"eig": "inf", "halfsizes": [1]}]


def test_casimir_shift_guardrail_exit_code(capsys, tmp_path):
    path = write_json(tmp_path / "vertical.json", {
        "A": {"n": 3, "entries": {"1,2": "x3"}},
        "B": {"n": 3, "entries": {"1,2": "1"}},
    })
    code, report = run_json(capsys, "poisson", "casimir", path, "--function", "x3", "--shift")
    assert code == 0
    assert report["shifted"]["entries"] == {"1,2": "2*x3"}
    assert run(capsys, "poisson", "casimir", path, "--function", "x3", "--shift", "--max-degree", "0")[0] == 3
