import io
import json
import subprocess
import sys

import pytest

from idealis import cli, parse_hypergraph, parse_ideal
from idealis.graphs import cycle, running_example
from idealis.hypergraph import format_hypergraph


@pytest.fixture
def re_file(tmp_path):
    p = tmp_path / "running.hg"
    p.write_text(format_hypergraph(running_example()))
    return str(p)


def run(*argv, stdin=None):
    out = io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = cli.main(list(argv), stdout=out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def test_chromatic(re_file):
    assert run("chromatic", re_file) == (0, "3\n")
    assert run("chromatic", "--check-all", re_file) == (0, "3\n")


def test_perfect_reason(re_file):
    code, out = run("perfect", re_file)
    assert code == 1
    assert out == "false\nodd hole {a,b,c,d,e}\n"
    code, out = run("perfect", "--format", "json", re_file)
    assert json.loads(out) == {"result": False, "reason": "odd hole {a,b,c,d,e}"}


def test_colorable_edgeless():
    assert run("colorable", "-k", "1", stdin="vertices: a b c\n")[0] == 0
    code, out = run("colorable", "-k", "2", "--format", "json", stdin="a b\n")
    assert code == 0 and json.loads(out)["coloring"] == {"a": 1, "b": 2}


def test_colorable_false(re_file):
    for m in ("oracle", "cover", "secant"):
        assert run("colorable", "-k", "2", "--method", m, re_file)[0] == 1


def test_ideal_verbs(re_file):
    assert run("edge-ideal", re_file)[1] == "(a*b, a*e, b*c, c*d, d*e, d*g, e*f, f*g)\n"
    assert run("cover-ideal", "--check-all", re_file)[1] == "(a*b*d*f, a*c*d*f, a*c*e*g, b*c*e*g, b*d*e*f, b*d*e*g)\n"
    assert run("secant", "-k", "2", re_file)[1] == "(a*b*c*d*e)\n"
    assert run("secant", "-k", "3", re_file)[1] == "(0)\n"
    assert run("dual", stdin="(x1*x2)")[1] == "(x1, x2)\n"
    assert run("gdual", "-a", "2,2", stdin="(x1^2, x1*x2)")[1] == "(x1^2, x1*x2^2)\n"
    assert run("decompose", "--check-all", stdin="(x1^2, x1*x2)")[1] == "(x1)\n(x1^2, x2)\n"
    assert run("power", "-s", "2", stdin="(a*b, c*d)")[1] == "(a^2*b^2, a*b*c*d, c^2*d^2)\n"
    assert run("symbolic", "-s", "2", stdin="(x1*x2, x2*x3, x1*x3)")[1] == "(x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2)\n"
    assert run("sym-gap", "--qmax", "3", stdin="(x1*x2, x2*x3, x1*x3)")[1] == "2\n"


def test_ass_verbs(re_file):
    code, out = run("ass", "--cover", "--format", "json", "--smax", "2", re_file)
    data = json.loads(out)
    assert ["a", "b", "c", "d", "e"] in data["primes"]["2"]
    assert data["persistent"] is True
    assert run("odd-holes", "--check-all", re_file)[1] == "{a,b,c,d,e}\n"
    code, out = run("decompose-j2", "--check-all", "--format", "json", re_file)
    assert {"bounds": {v: 2 for v in "abcde"}} in json.loads(out)
    code, out = run("expand-ass", "-s", "2", "--check-all", re_file)
    assert code == 0 and "(a, b, c, d, e)" in out


def test_graph_predicates(re_file, tmp_path):
    c4 = tmp_path / "c4.hg"
    c4.write_text(format_hypergraph(cycle(4)))
    assert run("bipartite", "--check-all", str(c4))[0] == 0
    assert run("bipartite", re_file)[0] == 1
    assert run("konig", "--check-all", str(c4))[0] == 0
    code, out = run("konig", re_file)
    assert code == 1 and "alpha0=4 beta1=3" in out
    assert run("packs", str(c4))[0] == 0
    assert run("packing", str(c4))[0] == 0
    code, out = run("packing", stdin="x1 x2\nx2 x3\nx1 x3\n")
    assert code == 1 and "alpha0=2 beta1=1" in out
    code, out = run("mfmc", "--qmax", "3", "--check-all", stdin="x1 x2\nx2 x3\nx1 x3\n")
    assert code == 1 and out.endswith("fails-at-q=2 witness x1*x2*x3\n")
    assert run("ntf", "--qmax", "3", "--check-all", str(c4))[0] == 0
    code, out = run("ntf", "--qmax", "3", stdin="x1 x2\nx2 x3\nx1 x3\n")
    assert code == 1 and "new: (x1, x2, x3)" in out


def test_critical_and_expand(re_file):
    assert run("critical", "-d", "3", re_file)[1] == "{a,b,c,d,e}\n"
    code, out = run("expand", "-s", "2", stdin="x y\n")
    assert parse_hypergraph(out).edges == (
        ("x.1", "x.2"), ("x.1", "y.1"), ("x.1", "y.2"), ("x.2", "y.1"), ("x.2", "y.2"), ("y.1", "y.2"))


def test_cc_scan_verb(tmp_path):
    state = tmp_path / "s.jsonl"
    code, out = run("cc-scan", "--nmax", "3", "--resume", str(state))
    assert code == 0 and out.startswith("scanned ")
    code2, out2 = run("cc-scan", "--nmax", "3", "--resume", str(state), "--jobs", "2")
    assert (code2, out2) == (code, out)


def test_input_errors(tmp_path, capsys):
    assert run("chromatic", stdin="vertices: a b\na c\n")[0] == 2
    assert "line 2, column 3" in capsys.readouterr().err
    assert run("decompose", stdin="(a*b, c*)")[0] == 2
    assert "line 1, column 9" in capsys.readouterr().err
    assert run("chromatic", str(tmp_path / "missing"))[0] == 2
    assert run("chromatic", stdin="a\n")[0] == 2
    assert "at least two vertices" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        run("colorable", stdin="a b\n")
    assert exc.value.code == 2


def test_resource_guard_names_flag(capsys, monkeypatch):
    many = " ".join(f"v{i}" for i in range(17))
    assert run("chromatic", stdin=f"vertices: {many}\n")[0] == 2
    assert "IDEALIS_MAX_VARS" in capsys.readouterr().err
    monkeypatch.setenv("IDEALIS_MAX_VARS", "17")
    assert run("chromatic", stdin=f"vertices: {many}\n") == (0, "1\n")
    assert run("ass", "--smax", "9", stdin="(a*b)")[0] == 2
    assert "--max-power" in capsys.readouterr().err


def test_round_trips(re_file):
    G = running_example()
    code, out = run("expand", "-s", "1", re_file)
    text = format_hypergraph(G)
    assert format_hypergraph(parse_hypergraph(text)) == text
    code, out = run("edge-ideal", "--format", "json", re_file)
    data = json.loads(out)
    code2, out2 = run("edge-ideal", "--format", "json", stdin=json.dumps(data))
    assert out2 == out
    I = parse_ideal("(a^2*b, c)")
    assert parse_ideal(str(I), I.ring) == I
    code, out = run("chromatic", stdin=json.dumps(G.to_json()))
    assert out == "3\n"


def test_vars_header():
    code, out = run("edge-ideal", stdin="vars: c b a\n(a*b, c)\n")
    assert out == "(c, b*a)\n"


def test_console_script(re_file):
    p = subprocess.run([sys.executable, "-m", "idealis", "chromatic", re_file],
                       capture_output=True, text=True)
    assert (p.returncode, p.stdout) == (0, "3\n")
