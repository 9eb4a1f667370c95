import json
import random
from fractions import Fraction

import pytest

from conftest import odd_heisenberg, su2_cyclic
from superlie.catalog import build_catalog
from superlie.cli import main
from superlie.scalars import Scalar
from superlie.serial import (
    SchemaError,
    algebra_from_json,
    algebra_to_json,
    matrix_from_json,
    matrix_to_json,
)


def test_algebra_roundtrip_bit_exact():
    for L in (su2_cyclic(), odd_heisenberg(), build_catalog("su_pq", 2, 1).algebra):
        data = algebra_to_json(L)
        text = json.dumps(data, sort_keys=True)
        again = algebra_from_json(json.loads(text))
        assert again.names == L.names
        assert again.parities == L.parities
        assert again.brackets == L.brackets
        assert json.dumps(algebra_to_json(again), sort_keys=True) == text


def test_matrix_roundtrip_with_tower_scalars():
    from superlie.linalg import Matrix

    rng = random.Random(3)
    rows = []
    for _ in range(3):
        row = []
        for _ in range(3):
            s = Scalar.from_rational(Fraction(rng.randint(-3, 3), 2))
            s = s + Scalar.sqrt_rational(2) * rng.randint(-2, 2)
            s = s + Scalar.i() * Fraction(rng.randint(-2, 2), 3)
            row.append(s)
        rows.append(row)
    M = Matrix(rows)
    assert matrix_from_json(matrix_to_json(M)) == M


def test_schema_error_names_path():
    with pytest.raises(SchemaError) as err:
        algebra_from_json({"names": ["a"], "parities": [0]})
    assert "$.brackets" in str(err.value)
    with pytest.raises(SchemaError) as err:
        algebra_from_json({"names": ["a"], "parities": [0], "brackets": [{"i": 0}]})
    assert "$.brackets[0]" in str(err.value)


def test_cli_validate_roundtrip(tmp_path, capsys):
    path = tmp_path / "alg.json"
    code = main(["catalog", "build", "su_pq", "--p", "2", "--q", "1", "--out", str(path)])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 8
    code = main(["validate", str(path)])
    assert code == 0
    res = json.loads(capsys.readouterr().out)
    assert res["valid"] and res["dim"] == 8
    # a built file also feeds --k for downstream commands
    code = main(["current", "--A", "grassmann:1", "--k", str(path)])
    assert code == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 16


def test_cli_validate_rejects_bad_algebra(tmp_path, capsys):
    bad = {
        "names": ["e1", "e2", "e3"],
        "parities": [0, 0, 0],
        "brackets": [
            {"i": 0, "j": 1, "value": ["0", "0", "1"]},
            {"i": 1, "j": 0, "value": ["0", "0", "1"]},
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code = main(["validate", str(path)])
    assert code == 1
    res = json.loads(capsys.readouterr().out)
    assert not res["valid"] and "antisymmetry" in res["error"]


def test_cli_malformed_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code = main(["validate", str(path)])
    assert code == 2


def test_cli_deterministic_output(capsys):
    main(["urad", "verify", "--k", "su_pq:2,1", "--s", "1", "--seed", "7"])
    first = capsys.readouterr().out
    main(["urad", "verify", "--k", "catalog:su_pq:2,1", "--s", "1", "--seed", "7"])
    second = capsys.readouterr().out
    assert first == second and first


def test_cli_current(capsys):
    code = main(["current", "--A", "grassmann:1", "--k", "catalog:su_n:2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["dim"] == 6


def test_cli_cohomology_h2(capsys):
    code = main(["cohomology", "h2", "--k", "catalog:pq_n:3"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["h2"] == 1


def test_cli_negative_control_exit_code(capsys):
    code = main(["cohomology", "verify-cor1", "--A", "grassmann:1", "--k", "catalog:pq_n:3", "--drop-eta"])
    out = json.loads(capsys.readouterr().out)
    assert code == 1
    assert out["defect"] >= 1


def test_cli_clifford_gamma(capsys):
    code = main(["clifford", "gamma", "--mu", "1,1"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["space_dim"] == 2 and out["commutant_dim"] == 1


def test_cli_clifford_rep_deterministic(capsys):
    main(["clifford", "rep", "--seed", "2"])
    a = capsys.readouterr().out
    main(["clifford", "rep", "--seed", "2"])
    b = capsys.readouterr().out
    assert a == b
    out = json.loads(a)
    assert out["space_dim"] == 2 ** (out["quotient_dim"] // 2)


def test_cli_report_all(tmp_path, capsys):
    sweep = {
        "catalog": [["su_pq", 2, 1]],
        "cor1": [{"s": 1, "k": ["su_n", 2]}],
        "urad": [{"s": 3, "k": ["su_n", 2], "seed": 7}],
        "kernel": [{"s": 1, "k": ["su_pq", 2, 1]}],
    }
    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(sweep))
    code = main(["report", "all", "--params", str(path)])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["all_pass"]


def test_cli_usage_errors(capsys):
    assert main(["cohomology", "verify-cor1", "--k", "catalog:su_n:2"]) == 2
    assert main(["current", "--A", "poly:2", "--k", "catalog:su_n:2"]) == 2
    assert main(["validate", "/nonexistent/file.json"]) == 2


def test_cli_urad_even_route_and_faithful(capsys):
    code = main(["urad", "verify", "--k", "catalog:su_n:2", "--s", "3", "--seed", "5"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["closure_contains_I"] and out["closure_equals_I"]
    code = main(["urad", "faithful", "--k", "catalog:su_n:2", "--s", "2"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["certificate_valid"]
    code = main(["urad", "faithful", "--k", "catalog:su_n:2", "--s", "3"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["mode"] == "witness"


def test_cli_pointed_from_file_reports_unknown(tmp_path, capsys):
    # a bare algebra file has no catalog witness data: honest "unknown"
    main(["catalog", "build", "psu_pp", "--p", "2", "--out", str(tmp_path / "psu.json")])
    capsys.readouterr()
    code = main(["urad", "pointed", "--k", str(tmp_path / "psu.json"), "--tries", "10"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["verdict"] == "unknown"


def test_cli_catalog_deterministic(capsys):
    main(["catalog", "build", "pq_n", "--n", "3"])
    a = capsys.readouterr().out
    main(["catalog", "build", "pq_n", "--n", "3"])
    b = capsys.readouterr().out
    assert a == b
