import json
import subprocess
import sys

import pytest

from wreathrep import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_tableaux_trivial(capsys):
    code, data, _ = run(capsys, "tableaux", "--n", "2")
    assert code == 0
    assert data["diagram_count"] == 2 and data["tableau_count"] == 2


def test_tableaux_cyclic2(capsys):
    code, data, _ = run(capsys, "tableaux", "--group", "cyclic:2", "--n", "2")
    assert code == 0
    assert data["diagram_count"] == 5 and data["tableau_count"] == 6
    first = data["diagrams"][0]["tableaux"][0]
    assert first["content_vector"] == {"labels": [1, 1], "values": ["0", "2"]}


@pytest.mark.parametrize("argv", [
    ["tableaux", "--n", "0"],
    ["tableaux", "--group", "cyclic:x", "--n", "2"],
    ["rep", "--mu", "not json"],
    ["rep", "--group", "cyclic:2", "--mu", "[2]"],
    ["verify", "--tol", "-1", "--n", "2"],
    ["rep"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nonsense", "--n", "2"])
    assert exc.value.code == 2


def test_verify_relations(capsys):
    code, data, _ = run(capsys, "verify", "--group", "cyclic:2", "--n", "2", "--suite", "relations")
    assert code == 0 and data["ok"]


def test_verify_all_trivial(capsys):
    code, data, _ = run(capsys, "verify", "--n", "3")
    assert code == 0
    assert [s["suite"] for s in data["suites"]] == list(cli.SUITES)


def test_verification_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_relations", lambda W: {"ok": False, "relations": []})
    code, data, _ = run(capsys, "verify", "--n", "2", "--suite", "relations")
    assert code == 1 and not data["ok"]


def test_sjb_matches_example(capsys):
    code, data, _ = run(capsys, "sjb", "--n", "3")
    assert code == 0
    second = data["chains"][1]
    assert second["start_rank"] == 1 and second["tableau"] == [[1, 2], [3]]
    assert second["vectors"][0] == [
        {"subset": [1], "coef": "-1"}, {"subset": [2], "coef": "-1"}, {"subset": [3], "coef": "2"}]


def test_rep_export(capsys):
    code, data, _ = run(capsys, "rep", "--group", "sym:3", "--mu", '{"3": [2]}', "--form", "orthogonal")
    assert code == 0
    assert data["dimension"] == 4 and data["scalar_kind"] == "quadratic:3"


def test_bare_partition(capsys):
    code, data, _ = run(capsys, "rep", "--mu", "[2, 1]")
    assert code == 0 and data["dimension"] == 2


def test_branch(capsys):
    code, data, _ = run(capsys, "branch", "--group", "cyclic:2", "--mu", '{"1": [1], "2": [1]}')
    assert code == 0 and data["check"]["ok"]
    assert len(data["branch"]) == 2


def test_johnson(capsys):
    code, data, _ = run(capsys, "johnson", "--group", "cyclic:2", "--x", "regular", "--n", "2")
    assert code == 0 and data["ok"]
    assert data["generalized_scheme"]["identity"] == {"lhs": 9, "rhs": 9, "ok": True}


def test_out_file(tmp_path, capsys):
    path = tmp_path / "o.json"
    assert cli.main(["sjb", "--n", "2", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["n"] == 2


def test_byte_identical_runs():
    cmd = [sys.executable, "-m", "wreathrep", "verify", "--group", "cyclic:2", "--n", "2", "--suite", "rep"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_guard_env(monkeypatch, capsys):
    monkeypatch.setenv("WREATHREP_MAX_ORDER", "5")
    code, _, err = run(capsys, "verify", "--group", "cyclic:2", "--n", "2", "--suite", "relations")
    assert code == 2 and "WREATHREP_MAX_ORDER" in err
