import json
from pathlib import Path

import pytest

from conftest import FIXTURES
from graphzeta.cli import main
from graphzeta.datum_io import datum_to_dict, load_datum, parse_datum
from graphzeta.errors import DatumError

GOLDEN = Path(__file__).resolve().parent / "golden"
DATUM = str(FIXTURES / "double_edge.json")


def _run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_load_and_roundtrip(tmp_path):
    d = load_datum(DATUM)
    assert d.p == 2
    assert d.base.n_edges == 2
    assert d.ram == (None, 1)
    doc = datum_to_dict(d)
    again = parse_datum(json.loads(json.dumps(doc)))
    assert datum_to_dict(again) == doc


def test_parse_errors():
    with pytest.raises(DatumError, match="prime"):
        parse_datum({"prime": 6, "vertices": ["a"], "edges": [], "ramification": {"a": 0}})
    with pytest.raises(DatumError, match="undeclared"):
        parse_datum(
            {
                "prime": 2,
                "vertices": ["a"],
                "edges": [{"from": "a", "to": "b", "voltage": 1}],
                "ramification": {"a": 0},
            }
        )
    with pytest.raises(DatumError, match="ramification"):
        parse_datum({"prime": 2, "vertices": ["a"], "edges": [], "ramification": {}})


def test_invalid_json_diagnostics(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"prime": 2,\n  broken\n}', encoding="utf-8")
    with pytest.raises(DatumError, match="line 2"):
        load_datum(bad)


def test_cli_exit_code_validation_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{}", encoding="utf-8")
    assert main(["zeta", str(bad)]) == 1
    capsys.readouterr()


def test_cli_exit_code_hypothesis(tmp_path, capsys):
    doc = {
        "prime": 2,
        "vertices": ["a", "b"],
        "edges": [
            {"from": "a", "to": "b", "voltage": 0},
            {"from": "a", "to": "b", "voltage": 0},
        ],
        "ramification": {"a": "unramified", "b": "unramified"},
    }
    f = tmp_path / "flat.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    # disconnected level
    assert main(["zeta", str(f), "--level", "1"]) == 2
    capsys.readouterr()


def test_cli_machine_reports_match_golden(capsys):
    cases = [
        ("zeta_level2.json", ["zeta", DATUM, "--level", "2", "--json"]),
        ("lfunctions_level2.json", ["lfunctions", DATUM, "--level", "2", "--json"]),
        ("tower_level6.json", ["tower", DATUM, "--max-level", "6", "--json"]),
        ("invariants.json", ["invariants", DATUM, "--json"]),
        (
            "verify_level2.json",
            ["verify", DATUM, "--level", "2", "--subgroup-order", "2", "--json"],
        ),
    ]
    for golden_name, argv in cases:
        code, out = _run(capsys, *argv)
        assert code == 0
        assert out == (GOLDEN / golden_name).read_text(encoding="utf-8")


def test_cli_deterministic(capsys):
    code1, out1 = _run(capsys, "lfunctions", DATUM, "--level", "2", "--json")
    code2, out2 = _run(capsys, "lfunctions", DATUM, "--level", "2", "--json")
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_human_zeta(capsys):
    code, out = _run(capsys, "zeta", DATUM, "--level", "2")
    assert code == 0
    assert "spanning trees = 32" in out
    assert "(1 - u^2)^2" in out


def test_cli_zeta_level_zero(capsys):
    code, out = _run(capsys, "zeta", DATUM, "--level", "0", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["h"] == [1, 0, -2, 0, 1]
    assert doc["spanning_trees"] == 2


def test_cli_verify_reports_inflation_note(capsys):
    code, out = _run(capsys, "verify", DATUM, "--level", "2", "--subgroup-order", "2")
    assert code == 0
    assert "not equal (expected)" in out
    assert "all passed" in out


def test_cli_invariants_values(capsys):
    code, out = _run(capsys, "invariants", DATUM, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["closed_form"] == {"mu": 1, "lambda": 1}
    assert doc["sweep"]["nu"] == -1 and doc["sweep"]["n0"] == 1
    assert doc["char_ideal"]["f"] == [0, 4, 2]
    assert doc["agreement"] is True


def test_cli_invariants_refuses_flat_unramified(tmp_path, capsys):
    doc = {
        "prime": 2,
        "vertices": ["a", "b"],
        "edges": [
            {"from": "a", "to": "b", "voltage": 1},
            {"from": "a", "to": "b", "voltage": 0},
        ],
        "ramification": {"a": "unramified", "b": "unramified"},
    }
    f = tmp_path / "flat.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    # chi(X_n) = 0 forever: the invariants routine must refuse, exit code 2
    assert main(["invariants", str(f)]) == 2
    err = capsys.readouterr().err
    assert "V^ram is empty and chi(X) = 0" in err


def test_cli_verify_level_one_skips_vanishing(capsys):
    code, out = _run(capsys, "verify", DATUM, "--level", "1", "--json")
    assert code == 0
    doc = json.loads(out)
    items = {it["name"]: it for it in doc["items"]}
    assert items["vanishing-order"]["status"] == "skip"
    assert "chi" in items["vanishing-order"]["detail"]
    assert doc["all_passed"]


def test_cli_verify_triangle_unramified(tmp_path, capsys):
    doc = {
        "prime": 2,
        "vertices": ["a", "b", "c"],
        "edges": [
            {"from": "a", "to": "b", "voltage": 1},
            {"from": "b", "to": "c", "voltage": 0},
            {"from": "c", "to": "a", "voltage": 0},
        ],
        "ramification": {"a": "unramified", "b": "unramified", "c": "unramified"},
    }
    f = tmp_path / "k3.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    code, out = _run(capsys, "verify", str(f), "--level", "2", "--json")
    assert code == 0
    parsed = json.loads(out)
    assert parsed["all_passed"]
    items = {it["name"]: it for it in parsed["items"]}
    # unramified covers do satisfy inflation
    assert items["inflation"]["detail"].startswith("equal")


def test_cli_invariants_uncertified_sweep_exits_3(capsys):
    # max level 2 leaves too few rows past the first negative level
    code, out = _run(capsys, "invariants", DATUM, "--max-level", "2", "--json")
    assert code == 3
    doc = json.loads(out)
    assert doc["agreement"] is False
    assert "error" in doc["sweep"]
    assert doc["closed_form"] == {"mu": 1, "lambda": 1}


def test_loop_edges_roundtrip_and_compute(tmp_path, capsys):
    doc = {
        "prime": 2,
        "vertices": ["v"],
        "edges": [
            {"from": "v", "to": "v", "voltage": 1},
            {"from": "v", "to": "v", "voltage": 0},
        ],
        "ramification": {"v": "unramified"},
    }
    f = tmp_path / "loops.json"
    f.write_text(json.dumps(doc), encoding="utf-8")
    d = load_datum(f)
    assert datum_to_dict(d) == doc
    code, out = _run(capsys, "tower", str(f), "--max-level", "4", "--json")
    assert code == 0
    rows = json.loads(out)["rows"]
    # the level-n cover is a 2^n-cycle with a loop at each vertex
    assert [r["spanning_trees"] for r in rows] == [1, 2, 4, 8, 16]
