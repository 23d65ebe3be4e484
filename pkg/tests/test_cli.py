import json

import jsonschema
import pytest

from ribbonschur.cli import SCHEMAS, load_schema, main, run


def call(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def payload(capsys, *argv, schema=None):
    status, out, err = call(capsys, "--json", *argv)
    assert status == 0, err
    data = json.loads(out)
    jsonschema.validate(data, load_schema(schema or argv[0]))
    return data


def no_floats(data):
    if isinstance(data, float):
        return False
    if isinstance(data, dict):
        return all(no_floats(v) for v in data.values())
    if isinstance(data, list):
        return all(no_floats(v) for v in data)
    return True


def test_schemas_are_valid():
    for name in SCHEMAS:
        jsonschema.Draft202012Validator.check_schema(load_schema(name))


def test_factor(capsys):
    data = payload(capsys, "factor", "12132")
    assert data == {"input": "1,2,1,3,2", "factors": ["1,2", "1,2"], "symmetric_flags": [False, False],
                    "class": ["1,2,1,3,2", "1,3,2,1,2", "2,1,2,3,1", "2,3,1,2,1"], "class_size": 4}
    assert payload(capsys, "factor", "132121332")["factors"] == ["2,1,3", "1,2"]
    assert payload(capsys, "class", "2,2,1,2")["class_size"] == 2


def test_equiv(capsys):
    assert payload(capsys, "equiv", "211", "112")["equivalent"] is True
    assert payload(capsys, "equiv", "211", "121")["equivalent"] is False
    status, out, _ = call(capsys, "equiv", "211", "112")
    assert status == 0 and out.strip().endswith("true")


def test_ribbon_bases(capsys):
    h = payload(capsys, "ribbon", "211", "--basis", "h")
    assert h["expansion"] == {"basis": "h", "n": 4, "terms": {"4": "1", "3,1": "-1", "2,2": "-1", "2,1,1": "1"}}
    f = payload(capsys, "ribbon", "211", "--basis", "F")
    assert f["expansion"]["terms"] == {"1,1,2": "1", "1,2,1": "1", "2,1,1": "1"}
    s = payload(capsys, "ribbon", "211", "--basis", "s")
    assert s["expansion"]["terms"] == {"2,1,1": "1"}
    assert s["shape"] == {"outer": "2,2,2", "inner": "1,1"}


def test_skew_and_lr(capsys):
    data = payload(capsys, "skew", "4332/221", "--basis", "s")
    assert data["expansion"]["terms"]["3,2,1,1"] == "2"
    assert payload(capsys, "skew", "22")["expansion"]["terms"] == {"1,2,1": "1", "2,2": "1"}
    a = payload(capsys, "lr", "12132")
    b = payload(capsys, "lr", "13212")
    assert a["coefficients"] == b["coefficients"]
    assert a["shape"] == {"outer": "5,4,2,2,1", "inner": "3,1,1"}


def test_qsym(capsys, tmp_path):
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"basis": "F", "n": 4, "terms": {"2,2": "1", "1,2,1": "1"}}))
    data = payload(capsys, "qsym", str(path), "--to", "M")
    assert data["symmetric"] is True
    assert data["schur"] == {"2,2": "1"}
    assert data["spread"] == ["1,2,1", "2,2"]
    assert data["output"]["basis"] == "M"
    data = payload(capsys, "qsym", "--monomial", "21", "--to", "F")
    assert data["schur"] == {"2,1": "1", "1,1,1": "-2"}
    path.write_text(json.dumps({"basis": "F", "n": 3, "terms": {"1,2": "1/2"}}))
    data = payload(capsys, "qsym", str(path))
    assert data["symmetric"] is False and "schur" not in data


def test_descents_matrix(capsys):
    data = payload(capsys, "descents-matrix", "4", schema="descents-matrix")
    assert sum(sum(row.values()) for row in data["matrix"].values()) == 24


def test_cone_rays(capsys):
    data = payload(capsys, "cone", "rays", "4", schema="cone rays")
    assert data["count"] == 6 and data["non_schur_count"] == 1
    assert {"schur": {"3,1": "1", "2,2": "-1", "2,1,1": "1"},
            "fundamental": {"1,1,2": "1", "1,3": "1", "2,1,1": "1", "3,1": "1"}} in data["rays"]
    # --json after the subcommand is accepted too
    status, out, _ = call(capsys, "cone", "rays", "4", "--json")
    assert status == 0 and json.loads(out)["count"] == 6


def test_cone_facets(capsys):
    data = payload(capsys, "cone", "facets", "5", schema="cone facets")
    assert data["status"] == "verified at this scale" and data["redundant_count"] == 0


def test_cone_balanced(capsys, tmp_path):
    mc = {"n": 2, "weights": {"": "1", "1": "1", "2": "1"}}
    jsonschema.validate(mc, load_schema("multicollection"))
    path = tmp_path / "mc.json"
    path.write_text(json.dumps(mc))
    data = payload(capsys, "cone", "balanced", str(path), schema="cone balanced")
    assert data["fully_balanced"] == data["symmetric"]


def test_verify(capsys):
    data = payload(capsys, "verify", "--n", "5", "equivalence")
    assert data["passed"] == data["total"] > 0
    status, out, _ = call(capsys, "verify", "--n", "4", "descents")
    assert status == 0 and "PASS" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from ribbonschur import verify
    monkeypatch.setattr(verify, "run_suite", lambda name, n: [verify.Check("forced", False, {}, "1,2")])
    status, out, _ = call(capsys, "--json", "verify", "equivalence")
    assert status == 1
    data = json.loads(out)
    jsonschema.validate(data, load_schema("verify"))
    assert data["checks"][0]["counterexample"] == "1,2"


@pytest.mark.parametrize("argv", [
    ["factor", "2x"],
    ["factor"],
    ["bogus"],
    ["equiv", "12"],
    ["skew", "43/5"],
    ["qsym"],
    ["ribbon", "21", "--basis", "q"],
    ["cone", "balanced", "/nonexistent/file.json"],
    ["descents-matrix", "0"],
])
def test_usage_errors(capsys, argv):
    status, out, err = call(capsys, "--json", *argv)
    assert status == 2
    assert out == ""
    data = json.loads(err)
    jsonschema.validate(data, load_schema("error"))
    assert data["error"] == "invalid_input"


@pytest.mark.parametrize("argv", [
    ["descents-matrix", "10"],
    ["descents-matrix", "7", "--max-n", "6"],
    ["cone", "rays", "8"],
    ["cone", "facets", "9"],
    ["verify", "--n", "10", "equivalence"],
    ["ribbon", "1111111111111", "--basis", "F"],
])
def test_resource_errors(capsys, argv):
    status, _, err = call(capsys, "--json", *argv)
    assert status == 3
    assert json.loads(err)["error"] == "resource_limit"


def test_text_errors(capsys):
    status, out, err = call(capsys, "descents-matrix", "12")
    assert status == 3 and err.startswith("error [resource_limit]")


def test_deterministic(capsys):
    for argv in (["--json", "cone", "rays", "5"], ["--json", "ribbon", "2212", "--basis", "F"],
                 ["--json", "descents-matrix", "5"], ["factor", "12132"]):
        first = call(capsys, *argv)
        assert call(capsys, *argv) == first
        if argv[0] == "--json":
            assert no_floats(json.loads(first[1]))


def test_run_returns_triple():
    command, data, status = run(["cone", "rays", "3"])
    assert (command, status) == ("cone rays", 0)
    assert data["count"] == 3


def test_help_mentions_bounds(capsys):
    with pytest.raises(SystemExit):
        run(["descents-matrix", "--help"])
    assert "--max-n" in capsys.readouterr().out


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "ribbonschur", "--json", "equiv", "211", "112"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["equivalent"] is True
