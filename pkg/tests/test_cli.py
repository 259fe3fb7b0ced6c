import json

import pytest
from hypothesis import given, strategies as st

from arithroot.cli import InputError, ProblemSpec, parse_input, run, serialize, to_dot
from arithroot.bicharacter import BraidingMatrix
from arithroot.groupoid import generate
from arithroot.values import GroupValue

from conftest import group_values, mat

ROW2 = ('{"rank":2,"torsion_order":1,"free":["q"],"matrix":[[{"free":[1],"tors":0},{"free":[0],"tors":0}],'
        '[{"free":[-1],"tors":0},{"free":[1],"tors":0}]]}')


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def shorthand(entries, N, free=()):
    return json.dumps({"rank": 2, "torsion_order": N, "free": list(free),
                       "matrix": [entries[:2], entries[2:]]})


def test_parse_canonical():
    spec = parse_input(ROW2)
    assert spec.matrix == mat("q", "1", "q^-1", "q")


def test_parse_shorthand():
    spec = parse_input(shorthand(["z^4", "1", "-z^2", "q*z"], 12, ["q"]))
    assert spec.matrix[0, 0] == GroupValue((0,), 4, 12)
    assert spec.matrix[1, 0].tors == 8
    assert spec.matrix[1, 1] == GroupValue((1,), 1, 12)


@pytest.mark.parametrize("text", [
    "{not json",
    "[1, 2]",
    '{"torsion_order": 4}',
    shorthand(["-z", "1", "1", "1"], 5),
    shorthand(["w", "1", "1", "1"], 4),
    shorthand(["z^^2", "1", "1", "1"], 4),
    '{"rank":2,"torsion_order":4,"matrix":[[{"free":[],"tors":4},"1"],["1","1"]]}',
    '{"rank":2,"torsion_order":4,"matrix":[["1","1"],["1"]]}',
    '{"rank":2,"torsion_order":4,"free":["q"],"matrix":[[{"free":[],"tors":0},"1"],["1","1"]]}',
])
def test_parse_errors(text):
    with pytest.raises(InputError):
        parse_input(text)


@given(st.integers(1, 24).flatmap(lambda N: st.integers(0, 2).flatmap(
    lambda F: st.lists(group_values(F, N), min_size=4, max_size=4))))
def test_roundtrip(vals):
    F, N = vals[0].shape
    spec = ProblemSpec(2, N, [f"p{k}" for k in range(F)], BraidingMatrix.rank2(*vals))
    text = serialize(spec)
    again = parse_input(text)
    assert again.matrix == spec.matrix
    assert serialize(again) == text


def test_classify_row7(tmp_path, capsys):
    path = write(tmp_path, "r7.json", shorthand(["z^2", "1", "z^5", "z^3"], 6))
    assert run(["classify", path, "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["outcome"] == "finite"
    assert report["row"]["row"] == 7
    assert set(report) >= {"outcome", "roots", "row", "dimension", "orbit"}


def test_classify_exit_codes(tmp_path, capsys):
    affine = write(tmp_path, "a.json", shorthand(["q", "1", "q^-2", "q"], 1, ["q"]))
    assert run(["classify", affine]) in (3, 4)
    bad = write(tmp_path, "b.json", shorthand(["1", "1", "q", "1"], 1, ["q"]))
    assert run(["classify", bad]) == 2
    assert run(["classify", affine, "--cap", "5"]) == 4
    capsys.readouterr()
    assert run(["groupoid", affine, "--cap", "5"]) == 4


def test_cap_exceeded_exit(tmp_path, monkeypatch, capsys):
    import arithroot.groupoid as g

    monkeypatch.setattr("arithroot.rank2.certify_infinite", lambda Q, cap=0: None)
    affine = write(tmp_path, "a.json", shorthand(["q", "1", "q^-2", "q"], 1, ["q"]))
    assert run(["classify", affine, "--cap", "50"]) == 3
    assert g.DEFAULT_CAP == 100_000


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        run(["nonsense"])
    assert exc.value.code == 1
    assert run(["classify", str(tmp_path / "missing.json")]) == 1
    bad = write(tmp_path, "bad.json", "{")
    assert run(["classify", bad]) == 1


def test_groupoid_dot(tmp_path, capsys):
    path = write(tmp_path, "a2.json", ROW2)
    dot = tmp_path / "g.dot"
    assert run(["groupoid", path, "--dot", str(dot), "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["nodes"]) == 6
    text = dot.read_text()
    assert text.startswith("graph") and text.count(" -- ") == 6
    W = generate(mat("q", "1", "q^-1", "q")).groupoid
    assert to_dot(W) == text


def test_equiv(tmp_path, capsys):
    v1 = write(tmp_path, "v1.json", shorthand(["z^4", "1", "z^-3", "-z^2"], 12))
    v3 = write(tmp_path, "v3.json", shorthand(["z^-3", "1", "z", "-1"], 12))
    tw = write(tmp_path, "tw.json", shorthand(["z^4", "z", "z^-4", "-z^2"], 12))
    aff = write(tmp_path, "aff.json", shorthand(["q", "1", "q^-2", "q"], 1, ["q"]))
    assert run(["equiv", "--mode", "weyl", v1, v3, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["equivalent"] is True
    assert run(["equiv", "--mode", "twist", v1, v3, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["equivalent"] is False
    assert run(["equiv", "--mode", "twist", v1, tw, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["equivalent"] is True
    assert run(["equiv", v1, aff]) == 4


def test_table(capsys):
    assert run(["table", "--format", "json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"] == report["total"] == 16
