import json

import jsonschema
import pytest

from braidedthompson import (DslError, braid_equal, format_header,
                             format_session, half_twist, parse_session)
from braidedthompson.cli import RESULT_SCHEMA, main
from conftest import context_half_twist, random_element, seeded

HEADER = "group { d:2, r:2, flavor:V, gens:[1 1] }"

ELEMENT = """
elem a {
  minus: (..)|.
  braid: 1
  labels: e; e; e
  plus: .|(..)
}
"""


def test_parse_basic_element():
    ctx, elements = parse_session(HEADER + ELEMENT)
    assert ctx.d == 2 and ctx.r == 2 and ctx.flavor == "V"
    assert str(ctx.spec.generators[0]) == "1 1"
    a = elements["a"]
    assert a.leaves == 3 and str(a.lb.braid) == "1"


def test_parse_trivial_gens_and_empty_braid():
    ctx, elements = parse_session(
        "group { d:2, r:1, flavor:V, gens:[] }\n"
        "elem e { minus: . braid: labels: e plus: . }")
    assert ctx.spec.generators == ()
    assert elements["e"].leaves == 1


def test_label_count_mismatch_is_an_error():
    text = HEADER + """
elem bad {
  minus: (..)|.
  braid: 1
  labels: e; e
  plus: .|(..)
}
"""
    with pytest.raises(DslError):
        parse_session(text)


def test_nonpure_generator_rejected_under_flavor_f():
    with pytest.raises(DslError) as err:
        parse_session("group { d:2, r:1, flavor:F, gens:[1] }")
    assert "pure" in str(err.value)


def test_syntax_error_carries_line_and_column():
    text = HEADER + "\nelem x {\n  minus: (..)|.\n  oops: 1\n}\n"
    with pytest.raises(DslError) as err:
        parse_session(text)
    assert err.value.line == 4


def test_forest_arity_checked():
    with pytest.raises(DslError):
        parse_session(HEADER + "\nelem x { minus: (...) braid: labels: e plus: (...) }")


def test_undeclared_generator_rejected():
    with pytest.raises(DslError) as err:
        parse_session(HEADER + "\nelem x { minus: . braid: labels: g2 plus: . }")
    assert "g2" in str(err.value)


def test_format_parse_roundtrip():
    ctx = context_half_twist(3, 1)
    rng = seeded("dsl-roundtrip")
    elements = {}
    for i in range(10):
        elements["e%d" % i] = ctx.reduce(random_element(ctx, rng, 2))
    text = format_session(ctx, elements)
    ctx2, parsed = parse_session(text)
    assert ctx2.d == ctx.d and ctx2.r == ctx.r and ctx2.flavor == ctx.flavor
    assert ctx2.spec.generators == ctx.spec.generators
    for name, s in elements.items():
        t = parsed[name]
        assert t.minus == s.minus and t.plus == s.plus
        assert t.lb.braid == s.lb.braid and t.lb.labels == s.lb.labels
    # byte-exact: reformatting the parsed session reproduces the text
    assert format_session(ctx2, parsed) == text


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    data = json.loads(out) if out else None
    if data is not None:
        jsonschema.validate(data, RESULT_SCHEMA)
    return code, data


@pytest.fixture
def session_file(tmp_path):
    path = tmp_path / "session.dsl"
    path.write_text(HEADER + ELEMENT + """
elem g {
  minus: (..)|.
  braid: 1 -2 1
  labels: g1; e; g1^-1
  plus: (..)|.
}

elem braige {
  minus: .|.|.
  braid: 1
  labels: e; e; e
  plus: (..)|.
}
""", encoding="utf-8")
    return str(path)


def test_cli_eq_and_strict_exit_codes(capsys, session_file):
    code, data = run_cli(capsys, "eq", "--input", session_file, "a", "a")
    assert code == 0 and data["equal"] is True
    code, data = run_cli(capsys, "--strict", "eq", "--input", session_file, "a", "g")
    assert code == 1 and data["equal"] is False
    code, data = run_cli(capsys, "eq", "--input", session_file, "a", "g")
    assert code == 0


def test_cli_errors_exit_2(capsys, session_file):
    code = main(["eq", "--input", "/nonexistent.dsl", "a", "b"])
    err = capsys.readouterr().err
    assert code == 2 and "ok" in err
    code = main(["eq", "--input", session_file, "a", "missing"])
    assert code == 2


def test_cli_reduce_mul_inv(capsys, session_file):
    code, data = run_cli(capsys, "reduce", "--input", session_file, "g")
    assert code == 0 and data["leaves_after"] <= data["leaves_before"]
    code, data = run_cli(capsys, "mul", "--input", session_file, "a", "g")
    assert code == 0 and data["element"]["heads"] == 2
    code, data = run_cli(capsys, "inv", "--input", session_file, "a")
    assert code == 0
    code, data = run_cli(capsys, "is-identity", "--input", session_file, "a")
    assert code == 0 and data["identity"] is False


def test_cli_retract_and_embed(capsys, session_file):
    code, data = run_cli(capsys, "retract", "--input", session_file, "g")
    assert code == 0
    assert braid_equal(half_twist(2) * half_twist(2),
                       __import__("braidedthompson").BraidWord.from_string(2, data["braid"]))
    code, data = run_cli(capsys, "embed", "--input", session_file,
                         "--label", "g1", "--prime")
    assert code == 0 and data["element"]["labels"][0] == "g1"


def test_cli_dangling_and_support(capsys, session_file):
    code, data = run_cli(capsys, "dangling-eq", "--input", session_file,
                         "braige", "braige")
    assert code == 0 and data["dangling_equal"] is True
    code, data = run_cli(capsys, "arc-support", "--input", session_file, "braige")
    assert code == 0 and data["supports"] == [[1, 2]]


def test_cli_member_and_project(capsys, tmp_path):
    path = tmp_path / "pure.dsl"
    path.write_text(
        "group { d:2, r:1, flavor:F, gens:[1 1] }\n"
        "elem x { minus: (..) braid: 1 1 labels: e; e plus: (..) }\n",
        encoding="utf-8")
    code, data = run_cli(capsys, "member", "--sub", "F", "--input", str(path), "x")
    assert code == 0 and data["member"] is True
    code, data = run_cli(capsys, "project-v", "--input", str(path), "x")
    assert code == 0 and data["diagram"]["permutation"] == [1]


def test_cli_complex_pipeline(capsys, tmp_path):
    code, data = run_cli(capsys, "complex", "linear-matching", "--d", "3", "--m", "9")
    assert code == 0 and data["complex"]["vertices"] == 7
    cpath = tmp_path / "k.json"
    cpath.write_text(json.dumps(data["complex"]), encoding="utf-8")

    code, data = run_cli(capsys, "homology", "--file", str(cpath))
    assert code == 0
    betti = {row["degree"]: row["betti"] for row in data["reduced_homology"]}
    assert betti[1] == 3  # wedge of three circles

    code, data = run_cli(capsys, "wcm", "--n", "1", "--file", str(cpath))
    assert code == 0 and data["wcm"] is True

    code, data = run_cli(capsys, "join-check", "--duplicated", "--file", str(cpath))
    assert code == 0 and data["complete_join"] is True

    code, data = run_cli(capsys, "morse", "--filter", "start", "--file", str(cpath))
    assert code == 0 and data["morse_ok"] is True
    assert [row["t"] for row in data["levels"]] == list(range(1, 8))


def test_cli_join_check_explicit_map(capsys, tmp_path):
    tri = {"vertices": 3, "maximal_faces": [[0, 1], [1, 2], [0, 2]]}
    payload = {"source": tri, "target": tri, "vertex_map": [0, 1, 2]}
    path = tmp_path / "join.json"
    path.write_text(json.dumps(payload), encoding="utf-8")
    code, data = run_cli(capsys, "join-check", "--file", str(path))
    assert code == 0 and data["complete_join"] is True


def test_cli_morse_with_heights(capsys, tmp_path):
    tri = {"vertices": 3, "maximal_faces": [[0, 1], [1, 2], [0, 2]]}
    path = tmp_path / "k.json"
    path.write_text(json.dumps(tri), encoding="utf-8")
    code, data = run_cli(capsys, "morse", "--file", str(path),
                         "--heights", "[0, 1, 2]", "--t", "2", "--k", "0")
    assert code == 0 and data["levels"][0]["holds"] is True


def test_cli_plain_mode(capsys, session_file):
    code = main(["--plain", "eq", "--input", session_file, "a", "a"])
    out = capsys.readouterr().out
    assert code == 0 and "equal\tTrue" in out


def test_cli_dot_export(capsys, tmp_path, session_file):
    dot = tmp_path / "g.dot"
    code, _ = run_cli(capsys, "reduce", "--input", session_file, "g",
                      "--dot", str(dot))
    assert code == 0
    text = dot.read_text(encoding="utf-8")
    assert text.startswith("digraph") and "braid" in text


def test_header_formatting_roundtrip():
    ctx = context_half_twist(3, 2)
    text = format_header(ctx)
    ctx2, _ = parse_session(text)
    assert ctx2.spec.generators == ctx.spec.generators
    assert format_header(ctx2) == text
