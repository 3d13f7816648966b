import json
from pathlib import Path

import pytest

from opcat import cli

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compose_grafting_example(capsys):
    code, out, _ = run(capsys, "compose", "--view", "C", "--operad", "free",
                       str(DATA / "grafting_f.json"), str(DATA / "grafting_h.json"))
    assert code == 0
    comp = json.loads(out)["composite"]
    assert comp["uppers"][0] == ["q1", [["r1", [2, 3]], ["r3", [1]]]]
    assert comp["uppers"][1] == ["q2", [["r2", []]]]


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "counterexample", "cs", "--genus", "2")
    data = json.loads(out)
    assert json.loads(json.dumps(data)) == data


def test_deterministic_output(capsys):
    args = ("probe-g2", "--view", "nerve", "--count", "5", "--seed", "7")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b


def test_check_order_gos(capsys):
    code, out, _ = run(capsys, "check-order", "--order", "gos", "--size", "2", "--grading", "2")
    assert code == 0 and json.loads(out)["violations"] == 0


def test_counterexample_omega_csv(capsys):
    code, out, _ = run(capsys, "counterexample", "omega", "--kmax", "4", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "degree,dim,newGenerators"
    assert sum(int(r.split(",")[2]) for r in lines[1:]) >= 2


def test_finding_is_not_failure(capsys):
    code, out, _ = run(capsys, "check-functor", "card-pop", "--bound", "3")
    assert code == 0 and json.loads(out)["ok"] is False


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "enumerate", "--operad", "nope")[0] == cli.EXIT_INPUT
    assert run(capsys, "check-order", "--bound", "99")[0] == cli.EXIT_INPUT
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "canonicalize", str(bad))[0] == cli.EXIT_INPUT
    assert run(capsys, "antichain", "--format", "csv")[0] == cli.EXIT_INPUT


def test_canonicalize_dot(capsys, tmp_path):
    from opcat import halfedge as he
    g = he.build([3, 3], [((0, 1), (1, 1)), ((0, 2), (1, 2))], [(0, 0), (1, 0)])
    p = tmp_path / "g.json"
    p.write_text(he.dumps(g))
    code, out, _ = run(capsys, "canonicalize", str(p), "--format", "dot")
    assert code == 0 and out.startswith("graph")
    code, out, _ = run(capsys, "canonicalize", str(p), "--constant-nine", "2")
    assert json.loads(out)["colorBound"] == 2 * (1 + 2)


def test_cobordism_factor(capsys, tmp_path):
    from opcat.cobordism import Cobordism
    f = Cobordism(2, 3, (((1, 2), (1, 3), 1), ((), (2,), 0)))
    p = tmp_path / "f.json"
    p.write_text(json.dumps(f.to_json()))
    code, out, _ = run(capsys, "cobordism", "factor", str(p))
    assert code == 0 and json.loads(out)["gos"]["grading"] == [1, 0]


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("OPCAT_THREADS", "2")
    _, a, _ = run(capsys, "probe-g2", "--view", "gos", "--count", "4")
    monkeypatch.setenv("OPCAT_THREADS", "1")
    _, b, _ = run(capsys, "probe-g2", "--view", "gos", "--count", "4")
    assert a == b
    monkeypatch.setenv("OPCAT_THREADS", "x")
    assert run(capsys, "probe-g2", "--view", "gos", "--count", "1")[0] == cli.EXIT_INPUT


@pytest.mark.parametrize("argv", [["nerve", "--semigroup", "positive", "--object", "2,2",
                                   "--samples", "0"],
                                  ["enumerate", "--operad", "uAs", "--bound", "2"]])
def test_misc_commands_run(capsys, argv):
    assert run(capsys, *argv)[0] == 0
