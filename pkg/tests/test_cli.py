import io
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

from weingarten import cli, verify
from weingarten.weingarten import clear_memory_caches

SCHEMAS = Path(__file__).resolve().parent.parent / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.json").read_text())


def wg(*argv, cache=None):
    out, err = io.StringIO(), io.StringIO()
    prefix = ["--cache-dir", str(cache)] if cache else ["--no-cache"]
    code = cli.run(prefix + list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_schemas_are_valid_documents():
    for path in SCHEMAS.glob("*.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))


def test_eval_forms():
    assert wg("eval", "--group", "unitary", "--partition", "2", "--form", "rational")[1] == "-1/(N^3 - N)\n"
    assert wg("eval", "--group", "orthogonal", "--partition", "2", "--form", "factored")[1] == "-1/((N-1)N(N+2))\n"
    code, out, _ = wg("eval", "--group", "orthogonal-shifted", "--partition", "2", "--form", "series", "--order", "5")
    assert code == 0
    assert out.strip() == "-N^-3 + 4*N^-4 - 13*N^-5 + O(N^-6)"


def test_eval_json_and_csv():
    _, out, _ = wg("--format", "json", "eval", "--group", "unitary", "--partition", "2,1")
    payload = json.loads(out)
    jsonschema.validate(payload, schema("weingarten-result"))
    assert payload["partition"] == "2,1"
    _, out, _ = wg("--format", "json", "eval", "--group", "orthogonal-shifted", "--partition", "2",
                   "--form", "series", "--order", "5")
    payload = json.loads(out)
    jsonschema.validate(payload, schema("series"))
    assert payload["coefficients"] == ["-1", "4", "-13"]
    _, out, _ = wg("--format", "csv", "eval", "--group", "unitary", "--partition", "2", "--form", "series",
                   "--order", "5")
    assert out.splitlines() == ["power,coefficient", "-3,-1", "-5,-1"]


def test_enumerate_census_and_coefficient():
    code, out, _ = wg("enumerate", "--group", "u", "--partition", "2", "--chi", "0", "--emit", "census")
    assert code == 0
    assert out.strip() == '{"2,2,2":21,"3,2":28,"4":8}'
    jsonschema.validate(json.loads(out), schema("census"))
    _, out, _ = wg("--format", "json", "enumerate", "--group", "o", "--partition", "2", "--chi", "1",
                   "--emit", "coefficient")
    payload = json.loads(out)
    jsonschema.validate(payload, schema("coefficient"))
    assert payload["coefficient"] == "-2"
    _, out, _ = wg("enumerate", "--group", "o", "--partition", "2", "--chi", "1", "--emit", "census", "--unoriented")
    assert json.loads(out) == {"2,2": 8, "3": 4}


def test_enumerate_records_are_json_lines():
    _, out, _ = wg("enumerate", "--group", "u", "--partition", "2", "--chi", "2")
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 2
    for line in lines:
        jsonschema.validate(line, schema("unitary-record"))
    _, out, _ = wg("enumerate", "--group", "orthogonal", "--partition", "2", "--chi", "2")
    lines = [json.loads(line) for line in out.splitlines()]
    assert len(lines) == 4
    for line in lines:
        jsonschema.validate(line, schema("orthogonal-record"))
        assert line["chi"] == 2 and line["chi_literal"] == 6
    _, out, _ = wg("--format", "csv", "enumerate", "--group", "u", "--partition", "2", "--chi", "2")
    assert out.splitlines()[0].startswith("group,n,m,rho")


def test_enumerate_series():
    _, out, _ = wg("--format", "json", "enumerate", "--group", "u", "--partition", "2", "--chi", "0",
                   "--emit", "series")
    payload = json.loads(out)
    jsonschema.validate(payload, schema("series"))
    assert payload["terms"] == {"3": "-1", "5": "-1"}


def test_counts():
    code, out, _ = wg("--format", "json", "counts", "--family", "palindromic-monotone", "--partition", "2",
                      "--kmax", "4")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema("count-table"))
    assert list(payload["counts"].values()) == [0, 1, 4, 13, 40]
    assert payload["metadata"]["order_convention"]
    _, out, _ = wg("--format", "json", "counts", "--family", "orthogonal-proper", "--partition", "1", "--kmax", "2")
    jsonschema.validate(json.loads(out), schema("count-table"))
    _, out, _ = wg("counts", "--family", "matching-monotone", "--partition", "2", "--kmax", "4")
    assert out.strip() == "0 1 1 3 5"


def test_wick():
    assert wg("wick", "--kind", "real", "--factors", "1,1;1,1;1,1;1,1", "--omega", "1")[1] == "3\n"
    assert wg("wick", "--kind", "complex", "--factors", "1,1;1,1;1,1;1,1", "--omega", "2")[1] == "1/2\n"
    _, out, _ = wg("--format", "json", "wick", "--kind", "real", "--factors", "1,1;1,2;2,1;2,2")
    payload = json.loads(out)
    jsonschema.validate(payload, schema("wick"))
    assert payload["value"] == "0"


def test_errors_exit_with_one():
    code, _, err = wg("eval", "--group", "unitary", "--partition", "7")
    assert code == 1 and "exceeds" in err
    code, _, err = wg("eval", "--group", "symplectic", "--partition", "2")
    assert code == 1 and "--group" in err
    code, _, err = wg("eval", "--group", "unitary", "--partition", "1,2")
    assert code == 1 and "--partition" in err
    code, _, err = wg("enumerate", "--group", "u", "--partition", "3", "--chi", "-2")
    assert code == 1 and "labels" in err
    code, _, _ = wg("wick", "--kind", "real", "--factors", "1;1")
    assert code == 1


def test_output_is_deterministic(tmp_path):
    args = ("--format", "json", "enumerate", "--group", "o", "--partition", "2", "--chi", "1")
    first = wg(*args, cache=tmp_path)[1]
    clear_memory_caches()
    second = wg(*args, cache=tmp_path)[1]
    assert first == second


def test_verify_small_passes_and_validates(tmp_path):
    clear_memory_caches()
    code, cold, _ = wg("--format", "json", "verify", "--suite", "small", cache=tmp_path)
    assert code == 0
    report = json.loads(cold)
    jsonschema.validate(report, schema("verify-report"))
    assert report["passed"]
    assert {c["criterion"] for c in report["criteria"]} == {1, 2, 3, 4, 5, 8, 9, 10}
    assert any(tmp_path.iterdir())
    clear_memory_caches()
    code, warm, _ = wg("--format", "json", "verify", "--suite", "small", cache=tmp_path)
    assert warm == cold
    # damaged cache files are recomputed, not fatal
    for path in tmp_path.glob("*.json"):
        path.write_text("garbage")
    clear_memory_caches()
    code, healed, _ = wg("--format", "json", "verify", "--suite", "small", cache=tmp_path)
    assert code == 0 and healed == cold


def test_verify_failure_exits_with_two(monkeypatch):
    def broken():
        result = verify.closed_forms()
        result.passed = False
        return result

    monkeypatch.setattr(verify, "CHECKS", (broken,))
    monkeypatch.setattr(cli, "run_suite", lambda suite: [c() for c in verify.CHECKS])
    code, out, _ = wg("verify")
    assert code == 2
    assert out.startswith("[FAIL]  1 closed forms")


def test_cache_dir_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("WG_CACHE_DIR", str(tmp_path / "env"))
    clear_memory_caches()
    out, err = io.StringIO(), io.StringIO()
    assert cli.run(["eval", "--group", "orthogonal", "--partition", "2"], out, err) == 0
    assert sorted(p.name for p in (tmp_path / "env").iterdir())


def test_console_script(tmp_path):
    env = dict(os.environ, WG_CACHE_DIR=str(tmp_path))
    proc = subprocess.run(
        [sys.executable, "-m", "weingarten", "eval", "--group", "unitary", "--partition", "1,1"],
        capture_output=True, text=True, env=env, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1/(N^2 - 1)"
