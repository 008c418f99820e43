import json
import subprocess
import sys

import pytest

from easytraces import __version__, cli
from easytraces.checks import TARGETS
from easytraces.report import Report


def run(argv, capsys):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)

    return write


def test_graph_gamma_b(capsys):
    code, out, _ = run(["graph", "gamma_B", "2"], capsys)
    doc = json.loads(out)
    assert code == 0 and sum(len(lv) for lv in doc["levels"]) == 7
    assert len(doc["dims"]) == 7


def test_graph_theta_levels_and_flags(capsys):
    code, out, _ = run(["graph", "--kind", "theta", "--levels", "3"], capsys)
    assert code == 0 and [len(lv) for lv in json.loads(out)["levels"]] == [1, 1, 3, 4]


def test_graph_young_zero(capsys):
    code, out, _ = run(["graph", "young", "0", "--format", "text"], capsys)
    assert code == 0 and out == "young: levels 0..0\nlevel 0 (1 vertices)\n  ∅  dim=1\n"


@pytest.mark.parametrize("fmt,marker", [("dot", "digraph"), ("csv", "level,payload,dim"), ("text", "level 1")])
def test_graph_formats(fmt, marker, capsys):
    code, out, _ = run(["graph", "walled", "3", "--format", fmt], capsys)
    assert code == 0 and marker in out


def test_graph_pascalized(capsys):
    code, out, _ = run(["graph", "young", "4", "--pascalize"], capsys)
    assert code == 0 and json.loads(out)["kind"] == "pascal(young)"


@pytest.mark.parametrize("argv", [
    ["graph", "young", "31"],
    ["graph", "young", "21", "--pascalize"],
    ["graph", "nope", "2"],
    ["graph", "young"],
    ["graph", "young", "2", "--kind", "theta"],
])
def test_graph_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and "error" in err


def test_graph_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(["graph", "theta", "6", "--pascalize", "--out", str(path)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_dims_tables(capsys):
    code, out, _ = run(["dims", "gamma_B", "2"], capsys)
    assert code == 0 and out.splitlines()[0] == "level,payload,dim" and len(out.splitlines()) == 8
    code, out, _ = run(["dims", "M", "3"], capsys)
    assert code == 0 and "3,1,6" in out
    code, out, _ = run(["dims", "K", "4", "--format", "json"], capsys)
    assert code == 0 and {"n": 4, "k": 1, "l": 0, "K": 7} in json.loads(out)
    assert run(["dims", "M", "3", "--format", "text"], capsys)[0] == 2
    assert run(["dims", "M", "401"], capsys)[0] == 2


@pytest.mark.parametrize("target,N", [("conjecture", 20), ("iso_gammaB", 8), ("dim_An", 12), ("hyperoct", 10)])
def test_verify_targets_pass(target, N, tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _, err = run(["verify", target, str(N), "--out", str(out)], capsys)
    doc = json.loads(out.read_text())
    assert code == 0 and doc["report"]["holds"]
    assert doc["version"] == __version__ and doc["config"]["target"] == target and doc["config"]["levels"] == N
    assert doc["duration_seconds"] >= 0
    assert "[PASS]" in err


def test_verify_failure_exit_code(monkeypatch, capsys):
    def broken(N):
        return Report("always fails", f"n <= {N}", False, {"n": 0})

    monkeypatch.setitem(TARGETS, "dim_An", (broken, 0, 20))
    code, out, _ = run(["verify", "dim_An", "3"], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["report"]["first_violation"] == {"n": 0}


@pytest.mark.parametrize("argv", [
    ["verify", "conjecture", "2"],
    ["verify", "conjecture", "151"],
    ["verify", "nope", "3"],
    ["verify", "conjecture"],
    ["verify", "dim_An", "3", "--resume", "x.json"],
])
def test_verify_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_verify_resume(tmp_path, capsys):
    ck = tmp_path / "ck.json"
    code, out, _ = run(["verify", "conjecture", "10", "--resume", str(ck)], capsys)
    assert code == 0 and json.loads(ck.read_text()) == {"target": "conjecture", "last_verified_n": 10}
    assert "resumed_after_n" not in json.loads(out)
    code, out, _ = run(["verify", "conjecture", "14", "--resume", str(ck)], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["resumed_after_n"] == 10 and doc["report"]["range"] == "11 <= n <= 14"
    assert json.loads(ck.read_text())["last_verified_n"] == 14


def test_verify_resume_rejects_bad_checkpoint(files, capsys):
    bad = files("ck.json", {"target": "other"})
    assert run(["verify", "conjecture", "10", "--resume", bad], capsys)[0] == 2
    broken = files("ck2.json", "{not json")
    code, _, err = run(["verify", "conjecture", "10", "--resume", broken], capsys)
    assert code == 2 and ":1:2:" in err


CAP_CUP = [{"diagram": [[1, 2], [-1, -2]], "coeffs": ["1"]}]
CROSSING = [{"diagram": [[1, -2], [2, -1]]}]
TRIVIAL = {"alpha": ["1"], "beta": []}


def test_mul_cap_cup(files, capsys):
    p = files("p.json", CAP_CUP)
    code, out, _ = run(["mul", p, p], capsys)
    assert code == 0 and json.loads(out) == [{"diagram": [[1, 2], [-1, -2]], "coeffs": ["0", "1"]}]
    code, out, _ = run(["mul", p, p, "--format", "text"], capsys)
    assert out.strip() == "(δ)·e{{1,2}, {1',2'}}"
    code, out, _ = run(["mul", p, p, "--delta", "7/2"], capsys)
    assert json.loads(out) == [{"diagram": [[1, 2], [-1, -2]], "value": "7/2"}]


def test_mul_errors(files, capsys):
    p = files("p.json", CAP_CUP)
    q = files("q.json", [{"diagram": [[1, -1]]}])
    bad = files("bad.json", '[{"diagram": [[1, 2]]\n  "x"]')
    assert run(["mul", p, q], capsys)[0] == 2
    code, _, err = run(["mul", p, bad], capsys)
    assert code == 2 and "bad.json:2:3:" in err
    assert run(["mul", p, p, "--delta", "1/0"], capsys)[0] == 2
    assert run(["mul", p, str(p) + ".missing"], capsys)[0] == 2


def test_trace_examples(files, capsys):
    t = files("t.json", TRIVIAL)
    x = files("x.json", CROSSING)
    p = files("p.json", CAP_CUP)
    assert run(["trace", x, t], capsys)[1] == "1\n"
    assert run(["trace", p, t, "--delta", "5"], capsys)[1] == "0\n"
    halves = files("h.json", {"alpha": ["1/2", "1/2"], "beta": []})
    three = files("c3.json", [{"diagram": [[1, -2], [2, -3], [3, -1]]}])
    assert run(["trace", three, halves, "--convention", "paper-literal"], capsys)[1] == "1/2\n"
    assert run(["trace", three, halves], capsys)[1] == "1/4\n"
    code, out, _ = run(["trace", three, halves, "--format", "json"], capsys)
    assert json.loads(out) == {"convention": "cycle-length", "delta": None, "trace": "1/4"}


def test_trace_errors(files, capsys):
    x = files("x.json", [{"diagram": [[1, -2], [2, -1]], "coeffs": ["0", "1"]}])
    t = files("t.json", TRIVIAL)
    assert run(["trace", x, t], capsys)[0] == 2
    bad_t = files("bad.json", {"alpha": ["1/4", "1/2"]})
    assert run(["trace", x, bad_t, "--delta", "1"], capsys)[0] == 2
    assert run(["trace", x, t, "--convention", "other"], capsys)[0] == 2


def test_enumerate_category(capsys):
    code, out, _ = run(["enumerate-category", "2", "--category", "O"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 3 and doc["category"] == "O"
    code, out, _ = run(["enumerate-category", "--levels", "2", "--category", "Sp", "--format", "text"], capsys)
    assert code == 0 and out.splitlines()[-1] == "# 15 diagrams in S'(2,2)"
    assert run(["enumerate-category", "7"], capsys)[0] == 2
    assert run(["enumerate-category", "2", "--category", "Z"], capsys)[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "easytraces", "graph", "young", "2", "--format", "csv"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("level,payload,dim")
    res = subprocess.run([sys.executable, "-m", "easytraces", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and __version__ in res.stdout
