import json
from pathlib import Path

import pytest

from aiinv import cli
from aiinv import verify as V

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ai_json(files, capsys):
    code, out, _ = run(capsys, "ai", "--ideal", files("i.txt", "vars: 3\n1 1 1\n"), "--field", "q", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["a"] == [None, None, 0] and d["reg"] == 2 and d["dim"] == 2
    assert {"i": 2, "alpha": [0, 0, 0], "dim": 1} in d["support"]


def test_ai_table_and_csv(files, capsys):
    f = files("i.txt", "vars: 3\n1 1 1\n")
    code, out, _ = run(capsys, "ai", "--ideal", f)
    assert code == 0 and "reg: 2" in out
    code, out, _ = run(capsys, "ai", "--ideal", f, "--format", "csv")
    assert out.splitlines() == ["i,a_i", "0,", "1,", "2,0"]


def test_ai_exit_codes(files, capsys):
    good = files("i.txt", "vars: 3\n1 1 1\n")
    code, _, err = run(capsys, "ai", "--ideal", files("b.txt", "vars: 3\n1 x 1\n"))
    assert code == 2 and "line 2, column 3" in err
    assert run(capsys, "ai", "--ideal", good, "--field", "fp:4")[0] == 2
    assert run(capsys, "ai", "--ideal", good, "--max-cells", "2")[0] == 3
    assert run(capsys, "ai", "--ideal", str(Path(good).with_name("missing.txt")))[0] == 2
    assert run(capsys, "ai")[0] == 2
    assert run(capsys, "ai", "--ideal", files("u.txt", "vars: 2\n0 0\n"))[0] == 2


def test_env_time_budget(files, capsys, monkeypatch):
    monkeypatch.setenv("AIINV_MAX_MS", "0")
    f = files("i.txt", "vars: 3\n2 1 0\n0 1 2\n")
    assert run(capsys, "ai", "--ideal", f)[0] == 3


def test_degree_complex(files, capsys):
    f = files("i.txt", "vars: 3\n1 1 1\n")
    code, out, _ = run(capsys, "degree-complex", "--ideal", f, "--alpha", "0,0,0")
    assert code == 0 and json.loads(out) == {"vertices": 3, "facets": [[1, 2], [1, 3], [2, 3]]}
    assert run(capsys, "degree-complex", "--ideal", f, "--alpha", "0,0")[0] == 2
    u = files("u.txt", "vars: 3\n0 0 0\n")
    code, out, _ = run(capsys, "degree-complex", "--ideal", u, "--alpha", "0,0,0")
    assert json.loads(out)["facets"] is None


def test_sr_and_homology(files, capsys):
    c = files("c.txt", "vertices: 3\n1 2\n2 3\n")
    code, out, _ = run(capsys, "sr", "--complex", c)
    assert code == 0 and out == "vars: 3\n1 0 1\n"
    code, out, _ = run(capsys, "sr", "--ideal", files("i.txt", out), "--json")
    assert json.loads(out) == {"vertices": 3, "facets": [[1, 2], [2, 3]]}
    assert run(capsys, "sr", "--complex", c, "--ideal", c)[0] == 2
    code, out, _ = run(capsys, "homology", "--complex", files("t.txt", "vertices: 3\n1 2\n2 3\n1 3\n"), "--json")
    assert json.loads(out)["reduced_betti"] == {"-1": 0, "0": 0, "1": 1}


def test_bundled_suite(tmp_path, capsys):
    out = tmp_path / "r.jsonl"
    code, _, _ = run(capsys, "verify", "all", "--suite", str(ROOT / "suites" / "paper.jsonl"), "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines and all(json.loads(x)["verdict"] == "pass" for x in lines)


def test_empty_suite(files, capsys):
    code, out, err = run(capsys, "verify", "fiber", "--suite", files("e.jsonl", ""))
    assert code == 0 and out == "" and "0/0/0" in err


def test_broken_formula_fails_with_replay(files, capsys, monkeypatch, tmp_path):
    real = V._power_side
    monkeypatch.setattr(V, "_power_side", lambda I, k, j, f: real(I, k, j, f) + 1)
    suite = files("s.jsonl", json.dumps({"check": "fiber", "I": {"vars": 3, "gens": [[1, 1, 1]]},
                                         "J": {"vars": 3, "gens": [[1, 1, 1]]}, "k": 1, "j": 2}) + "\n")
    out = tmp_path / "rep.jsonl"
    code, stdout, err = run(capsys, "verify", "fiber", "--suite", suite, "--out", str(out))
    assert code == 1
    replay = Path(str(out) + ".replay.jsonl")
    assert f"replay: {replay}" in err
    assert json.loads(replay.read_text())["check"] == "fiber"


def test_failure_halts_suite(files, capsys, monkeypatch, tmp_path):
    real = V._power_side
    monkeypatch.setattr(V, "_power_side", lambda I, k, j, f: real(I, k, j, f) + 1)
    rec = {"check": "fiber", "I": {"vars": 3, "gens": [[1, 1, 1]]},
           "J": {"vars": 3, "gens": [[1, 1, 1]]}, "k": 1, "j": 2}
    suite = files("s.jsonl", (json.dumps(rec) + "\n") * 3)
    out = tmp_path / "rep.jsonl"
    assert run(capsys, "verify", "fiber", "--suite", suite, "--out", str(out))[0] == 1
    assert len(out.read_text().splitlines()) == 1


def test_bad_suite_line(files, capsys):
    assert run(capsys, "verify", "all", "--suite", files("s.jsonl", "{oops\n"))[0] == 2
    assert run(capsys, "verify", "all", "--suite", files("t.jsonl", '{"check": "nope"}\n'))[0] == 2
    assert run(capsys, "verify", "fiber")[0] == 2


def test_random_verify_is_deterministic_across_workers(tmp_path, capsys):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    args = ["verify", "all", "--random", "8", "--seed", "5", "--max-vars", "4"]
    assert run(capsys, *args, "--out", str(a))[0] == 0
    assert run(capsys, *args, "--out", str(b), "--threads", "2")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_resource_limit_in_verify(files, capsys):
    # ideals not used elsewhere, so no cached table bypasses the cap
    suite = files("s.jsonl", json.dumps({"check": "fiber", "I": {"vars": 3, "gens": [[3, 1, 2]]},
                                         "J": {"vars": 3, "gens": [[2, 3, 1]]}, "k": 1, "j": 2}) + "\n")
    code, out, _ = run(capsys, "verify", "fiber", "--suite", suite, "--max-cells", "1")
    assert code == 3 and json.loads(out)["verdict"] == "resource-limit"


def test_bad_threads(files, capsys):
    assert run(capsys, "verify", "fiber", "--random", "1", "--threads", "0")[0] == 2
