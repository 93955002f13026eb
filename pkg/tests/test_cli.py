import json

import pytest

from crystal_forge.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_json(capsys):
    code, out, err = run_cli(capsys, "roots", "--diagram", "A2")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload["schema"] == "crystal-forge/1"
    assert payload["cartan"] == [[2, -1], [-1, 2]]
    assert payload["x_matrix"] == [[0, 1], [1, 0]]


def test_crystal_dot_has_three_nodes(capsys):
    code, out, err = run_cli(
        capsys, "crystal", "--diagram", "A2", "--hw", "1,0", "--format", "dot"
    )
    assert code == 0
    assert out.count("[label=") == 3  # one node statement per vertex
    assert out.count("->") == 2


def test_crystal_rejects_nondominant(capsys):
    code, out, err = run_cli(capsys, "crystal", "--diagram", "A2", "--hw", "-1,0")
    assert code == 1
    assert out == ""
    assert "dominant" in err


def test_crystal_vertex_cap_exit_code(capsys):
    code, out, err = run_cli(
        capsys, "crystal", "--diagram", "A2", "--hw", "3,3", "--max-vertices", "10"
    )
    assert code == 2
    assert "cap" in err


def test_mult_prints_bare_count_by_default(capsys):
    code, out, err = run_cli(
        capsys,
        "mult", "--diagram", "A2", "--target", "1,1", "--factors", "1,1", "1,1",
    )
    assert code == 0
    assert out.strip() == "2"


def test_mult_json_payload(capsys):
    code, out, err = run_cli(
        capsys,
        "mult", "--diagram", "A2", "--target", "1,1",
        "--factors", "1,1", "1,1", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["multiplicity"] == 2


def test_decompose_deterministic(capsys):
    args = ("decompose", "--diagram", "A2", "--factors", "1,1", "1,1")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert {"weight": [1, 1], "mult": 2} in payload["summands"]


def test_branch_json(capsys):
    code, out, _ = run_cli(
        capsys, "branch", "--diagram", "A2", "--hw", "1,0", "--keep", "0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["subdiagram"] == "A1"
    assert payload["summands"] == [
        {"weight": [1], "mult": 1},
        {"weight": [0], "mult": 1},
    ]


def test_dims_json(capsys):
    code, out, _ = run_cli(
        capsys,
        "dims", "--diagram", "A2", "--d", "2,0", "--v", "1,0", "--v0", "1,0",
        "--d-tuple", "2,0", "--v-tuple", "1,0",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["hw_weight"] == [0, 1]
    assert payload["gprime_weight"] == [[1, 1], [1, 0]]
    assert payload["gprime_integrable"] is True
    assert "dim_tensor_variety" in payload["strata"]


def test_sl2_subcommands(capsys):
    code, out, _ = run_cli(capsys, "sl2", "crystal", "--d", "3", "--v0", "1")
    assert code == 0
    assert len(json.loads(out)["vertices"]) == 2

    code, out, _ = run_cli(
        capsys, "sl2", "component", "--first", "2,0,1", "--second", "2,0,0"
    )
    assert json.loads(out) == {"schema": "crystal-forge/1", "v0": 0, "v": 1}

    code, out, _ = run_cli(capsys, "sl2", "range", "--first", "2,0", "--second", "2,0")
    assert json.loads(out)["v0_range"] == [0, 1, 2]

    code, out, _ = run_cli(
        capsys, "sl2", "nonempty", "--first", "2,0", "--second", "2,0", "--v", "3"
    )
    assert json.loads(out)["nonempty"] is False


def test_adhm_check_and_stratum(tmp_path, capsys):
    datum = {
        "diagram": "A1",
        "d": [2],
        "v": [1],
        "x": {},
        "p": [[[[0, 1], [1, 1]]]],
        "q": [[[[1, 1]], [[0, 1]]]],
        "flag": [
            [[[[1, 1], [0, 1]]]],
            [[[[1, 1], [0, 1]], [[0, 1], [1, 1]]]],
        ],
    }
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(datum))
    code, out, _ = run_cli(capsys, "adhm", "check", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["preprojective"] and payload["stable"] and payload["ast_stable"]

    code, out, _ = run_cli(capsys, "adhm", "stratum", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["member"] is True
    assert payload["v_tuple"] == [[0], [0]]
    assert payload["vt_tuple"] == [[0], [1]]


def test_adhm_residual_reported(tmp_path, capsys):
    datum = {
        "diagram": "A1",
        "d": [2],
        "v": [1],
        "x": {},
        "p": [[[[1, 1], [0, 1]]]],
        "q": [[[[1, 1]], [[0, 1]]]],
    }
    path = tmp_path / "datum.json"
    path.write_text(json.dumps(datum))
    code, out, _ = run_cli(capsys, "adhm", "check", str(path))
    assert code == 0
    payload = json.loads(out)
    assert payload["preprojective"] is False
    assert "residual" in payload


def test_adhm_missing_file(capsys):
    code, out, err = run_cli(capsys, "adhm", "check", "/nonexistent/file.json")
    assert code == 1 and out == ""


def test_unknown_flag_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "roots", "--diagram", "A2", "--bogus")
    assert code == 1


def test_selftest_single_criterion(capsys):
    code, out, _ = run_cli(capsys, "selftest", "--only", "c3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["criteria"][0]["id"] == "c3"


def test_selftest_rejects_unknown_criterion(capsys):
    code, out, err = run_cli(capsys, "selftest", "--only", "c99")
    assert code == 1 and out == ""
    assert "unknown criterion" in err
