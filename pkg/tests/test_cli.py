import json

import pytest

from qfueter import cli, fixtures
from qfueter.fixtures import EX49_SOURCE, Fixture


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def diag(err):
    lines = [json.loads(line) for line in err.strip().splitlines()]
    assert len(lines) == 1
    return lines[0]


def test_analyze_map_ok(capsys):
    code, out, err = run(capsys, "analyze-map", "coeffs: 0, 1, 1, 1", "--json")
    assert code == cli.EXIT_OK and err == ""
    r = json.loads(out)
    assert r["size"] == 3 and r["classification"]["kind"] == "empty"
    assert r["rank"] == 4 and r["right_regular"]


def test_analyze_map_human_output(capsys):
    code, out, _ = run(capsys, "analyze-map", "pairform: 1, 0, 1, j")
    assert code == 0
    assert "size" in out and "0.0625" in out


def test_analyze_map_from_file(capsys, tmp_path):
    src = tmp_path / "map.txt"
    src.write_text("# the zero map\nmatrix: [" + ", ".join(["0"] * 16) + "]\n")
    code, out, _ = run(capsys, "analyze-map", str(src), "--json")
    assert code == 0
    r = json.loads(out)
    assert r["size"] == 0 and r["classification"]["kind"] == "all"


def test_analyze_map_parse_error(capsys):
    code, out, err = run(capsys, "analyze-map", "coeffs: 1, i, q, 0")
    assert code == cli.EXIT_PARSE and out == ""
    d = diag(err)
    assert d["code"] == "parse_error"
    assert d["position"] == {"line": 1, "col": 15}


def test_analyze_map_semantic_error(capsys):
    code, _, err = run(capsys, "analyze-map", "coeffs: 0, 1, 1")
    assert code == cli.EXIT_PARSE
    assert diag(err)["code"] == "semantic_error"


def test_analyze_map_not_regular(capsys):
    code, out, err = run(capsys, "analyze-map", "coeffs: 1, 0, 0, 0", "--json")
    assert code == cli.EXIT_DOMAIN
    r = json.loads(out)
    assert r["size"] is None and not r["right_regular"]
    assert diag(err)["code"] == "domain_error"


def test_analyze_function_ok(capsys):
    code, out, err = run(capsys, "analyze-function", EX49_SOURCE, "--grid", "3", "--json")
    assert code == 0 and err == ""
    r = json.loads(out)
    assert r["classification"]["case"] == "generic_size2"
    assert r["right_regular"]


def test_analyze_function_not_regular(capsys):
    code, out, err = run(capsys, "analyze-function", "f1 = conj(z1); f2 = 0", "--grid", "2", "--json")
    assert code == cli.EXIT_NOT_REGULAR
    r = json.loads(out)
    assert not r["right_regular"] and r["witness"] is not None
    assert diag(err)["code"] == "not_regular"


def test_analyze_function_parse_error(capsys):
    code, _, err = run(capsys, "analyze-function", "f1 = z1 + ; f2 = 0")
    assert code == cli.EXIT_PARSE
    assert diag(err)["position"] == {"line": 1, "col": 11}


def test_analyze_function_box_and_grid_errors(capsys):
    code, _, err = run(capsys, "analyze-function", EX49_SOURCE, "--box=1,0,0,1,0,1,0,1")
    assert code == cli.EXIT_DOMAIN
    code, _, err = run(capsys, "analyze-function", EX49_SOURCE, "--box=1,2,3")
    assert code == cli.EXIT_PARSE
    code, _, err = run(capsys, "analyze-function", EX49_SOURCE, "--grid", "0")
    assert code == cli.EXIT_DOMAIN


def test_analyze_function_negative_box(capsys):
    code, out, _ = run(capsys, "analyze-function", EX49_SOURCE, "--box=-1,1,-1,1,0.5,1,0.5,1", "--grid", "2", "--json")
    assert code == 0
    assert json.loads(out)["box"] == [-1, 1, -1, 1, 0.5, 1, 0.5, 1]


def test_structure_field_path(capsys, tmp_path):
    path = tmp_path / "path.txt"
    path.write_text("0 0 1 0\n0 0 1 0.1  # second\n0.1 0 1 0.2\n")
    code, out, _ = run(capsys, "analyze-function", EX49_SOURCE, "--grid", "2", "--path", str(path), "--json")
    assert code == 0
    assert len(json.loads(out)["structure_field"]) == 3
    path.write_text("0.5 0 0 0\n")
    code, _, err = run(capsys, "analyze-function", EX49_SOURCE, "--grid", "2", "--path", str(path))
    assert code == cli.EXIT_DOMAIN
    path.write_text("0 0 one 0\n")
    code, _, err = run(capsys, "analyze-function", EX49_SOURCE, "--grid", "2", "--path", str(path))
    assert code == cli.EXIT_PARSE
    assert diag(err)["position"]["line"] == 1


def test_examples_all_pass(capsys):
    code, out, err = run(capsys, "examples", "--json")
    assert code == 0 and err == ""
    r = json.loads(out)
    assert r["failed"] == 0 and r["passed"] == len(fixtures.FIXTURES)


def test_examples_filter(capsys):
    code, out, _ = run(capsys, "examples", "size3", "--json")
    names = [f["name"] for f in json.loads(out)["fixtures"]]
    assert code == 0 and "three-term-map" in names
    code, out, _ = run(capsys, "examples", "constant")
    assert code == 0 and "constant" in out


def test_examples_empty_filter_warns(capsys):
    code, out, err = run(capsys, "examples", "nonexistent", "--json")
    assert code == 0
    assert diag(err)["code"] == "warning"
    assert json.loads(out)["fixtures"] == []


def test_examples_failure_exit_code(capsys, monkeypatch):
    bad = Fixture("broken", ("test",), "always fails", "", lambda: [("never", False, "")])
    crash = Fixture("crash", ("test",), "raises", "", lambda: 1 / 0)
    monkeypatch.setattr(fixtures, "FIXTURES", (bad, crash))
    code, out, _ = run(capsys, "examples", "--json")
    assert code == cli.EXIT_EXAMPLES_FAILED
    r = json.loads(out)
    assert r["failed"] == 2
    assert "ZeroDivisionError" in r["fixtures"][1]["checks"][0]["detail"]


def test_json_is_byte_identical(capsys):
    outs = set()
    for _ in range(2):
        outs.add(run(capsys, "analyze-map", "coeffs: (1-2j)/2, (1+2j)/2, (2+j)/2, (2-j)/2", "--json")[1])
        outs.add(run(capsys, "examples", "map", "--json")[1] + "|")
    assert len(outs) == 2


def test_usage_error_exits_nonzero():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2
