import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from multitwist.cli import main
from multitwist.surface import gen_extremal, gen_random
from multitwist.textformat import ParseError, dump_surface, parse_input

BANANA = """\
# two parallel curves
vertex u genus=1
vertex v genus=1
edge b1 u v weight=2
edge b2 u v weight=-2
"""

THETA = """\
vertex u genus=1
vertex v genus=1
edge c1 u v weight=1
edge c2 u v weight=-1
edge c3 u v
"""

TRIANGLE = """\
vertex x genus=1
vertex y genus=1
vertex z genus=1
edge b1 x y weight=1
edge b2 y z weight=2
edge b3 z x weight=-3
"""


def run(capsys, *argv, stdin=None, monkeypatch=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


# ------------------------------------------------------------------ parsing

def test_parse_minimal():
    p = parse_input("vertex u\nvertex v\nedge e u v\n")
    assert p.graph.edge_ids == ("e",) and p.weights == {"e": 0}
    assert not p.has_all_genera
    with pytest.raises(ParseError, match="genus required"):
        p.surface()


@pytest.mark.parametrize(
    "text, line, match",
    [
        ("vertex u\nedge e u w\n", 2, "unknown vertex 'w'"),
        ("vertex u\nvertex u\n", 2, "duplicate vertex"),
        ("vertex u\nvertex v\nedge e u v\nedge e v u\n", 4, "duplicate edge"),
        ("vertex u genus=x\n", 1, "malformed integer"),
        ("vertex u\nvertex v\nedge e u v weight=1.5\n", 3, "malformed integer"),
        ("vertex u colour=red\n", 1, "unexpected field"),
        ("node u\n", 1, "unknown record type"),
        ("vertex u genus=-1\n", 1, "nonnegative"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, match):
    with pytest.raises(ParseError, match=match) as info:
        parse_input(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}, column ")


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        parse_input("vertex u\nedge e u   w\n")
    assert info.value.column == 12


def test_comment_only_file_is_empty_graph():
    with pytest.raises(ParseError, match="empty graph"):
        parse_input("# nothing\n\n")


def test_disconnected_input():
    with pytest.raises(ParseError, match="not connected"):
        parse_input("vertex u\nvertex v\n")


@settings(max_examples=50)
@given(st.integers(2, 8), st.integers(0, 10**6))
def test_round_trip_random(g, seed):
    s = gen_random(g, seed)
    assert parse_input(dump_surface(s)).surface() == s


@pytest.mark.parametrize("g", range(2, 8))
def test_round_trip_extremal(g):
    s = gen_extremal(g)
    assert parse_input(dump_surface(s)).surface() == s


# ------------------------------------------------------------------ commands

def test_classify_output(capsys, write):
    f = write("vertex u\nvertex v\nvertex w\nedge a u v\nedge b1 v w\nedge b2 v w\nedge c u u\n")
    code, out, _ = run(capsys, "classify", f)
    assert code == 0
    assert out == "a a\nb1 b 0\nb2 b 0\nc c\n"


def test_check_torelli(capsys, write):
    assert run(capsys, "check-torelli", write(BANANA)) == (0, "YES\n", "")
    code, out, _ = run(capsys, "check-torelli", write(THETA))
    assert code == 1 and out == "NO c-type edge c1 has nonzero exponent\n"


def test_rank(capsys, write):
    assert run(capsys, "rank", write(TRIANGLE))[:2] == (0, "2\n")


def test_decompose(capsys, write):
    code, out, _ = run(capsys, "decompose", write(TRIANGLE))
    assert code == 0 and out == "BP b2 b1 2\nBP b3 b1 -3\n"
    f = write("vertex c\nvertex l1\nvertex l2\nedge a1 c l1 weight=4\nedge a2 c l2\n")
    assert run(capsys, "decompose", f)[:2] == (0, "SEP a1 4\n")
    code, out, _ = run(capsys, "decompose", write(THETA))
    assert code == 1 and out.startswith("NO c-type edge c1")


def test_check_mod(capsys, write):
    f = write("vertex u\nvertex v\nedge b1 u v weight=1\nedge b2 u v weight=1\n")
    assert run(capsys, "check-mod", "2", f)[:2] == (0, "YES\n")
    code, out, _ = run(capsys, "check-mod", "3", f)
    assert code == 1 and out.startswith("NO")
    code, _, err = run(capsys, "check-mod", "1", f)
    assert code == 2 and "modulus" in err


def test_verify_homology(capsys, write):
    code, out, _ = run(capsys, "verify-homology", write(THETA))
    assert code == 0 and out == "torelli NO\nidentity_action NO\nAGREE\n"
    code, out, _ = run(capsys, "verify-homology", write(TRIANGLE))
    assert code == 0 and out == "torelli YES\nidentity_action YES\nAGREE\n"


def test_verify_homology_needs_genus(capsys, write):
    code, _, err = run(capsys, "verify-homology", write("vertex u\nvertex v\nedge b1 u v\nedge b2 u v\n"))
    assert code == 2 and "genus required" in err


def test_bounds(capsys, write):
    code, out, _ = run(capsys, "bounds", write(BANANA))
    assert code == 0
    assert out.splitlines() == [
        "genus 3",
        "rank 1",
        "vertices 2",
        "omega 2",
        "vertex_bound rank<=vertices-1 1<=1 OK slack 0",
        "genus_bound rank+omega<=2g-3 3<=3 OK slack 0",
    ]


def test_bounds_rejects_invalid_model(capsys, write):
    code, _, err = run(capsys, "bounds", write("vertex u genus=0\nvertex v genus=1\nedge a u v\n"))
    assert code == 2 and "one boundary" in err


def test_generators_round_trip_through_cli(capsys, write):
    code, out, _ = run(capsys, "gen-extremal", "4")
    assert code == 0 and parse_input(out).surface() == gen_extremal(4)
    code, out1, _ = run(capsys, "gen-random", "5", "9")
    code2, out2, _ = run(capsys, "gen-random", "5", "9")
    assert code == code2 == 0 and out1 == out2
    assert parse_input(out1).surface() == gen_random(5, 9)
    code, out, _ = run(capsys, "bounds", write(out1))
    assert code == 0


def test_generator_argument_validation(capsys):
    assert run(capsys, "gen-extremal", "1")[0] == 2
    assert run(capsys, "gen-random", "1", "0")[0] == 2
    assert run(capsys, "gen-extremal", "x")[0] == 2


def test_conjecture_demo(capsys):
    code, out, _ = run(capsys, "conjecture-demo")
    assert code == 0
    lines = out.splitlines()
    assert [l.split()[-1] for l in lines if l.startswith("vector")] == ["1", "-3", "3", "-1"]
    assert lines[-1] == "identity YES"


def test_input_errors_exit_2(capsys, write):
    code, _, err = run(capsys, "rank", write("vertex u\nedge e u q\n"))
    assert code == 2 and err.startswith("error: line 2, column 10: unknown vertex")
    assert run(capsys, "rank", "/nonexistent/file")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_stdin_and_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "multitwist", "--format", "text", "check-torelli", "-"],
        input=BANANA, capture_output=True, text=True,
    )
    assert res.returncode == 0 and res.stdout == "YES\n"


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "multitwist", "gen-random", "6", "123"]
    a = subprocess.run(cmd, capture_output=True).stdout
    b = subprocess.run(cmd, capture_output=True).stdout
    assert a == b and a
