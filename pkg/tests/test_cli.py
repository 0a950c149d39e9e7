import io
import json

import pytest

from ultratree import isometric, validate_space
from ultratree.cli import main
from ultratree.documents import DocumentError, parse_space_document, parse_tree_document, to_dot
from ultratree.represent import RootedLabeledTree

QUADRUPLE = {
    "points": ["x", "y", "z", "t"],
    "matrix": [["0", "2", "1", "2"], ["2", "0", "2", "1"], ["1", "2", "0", "2"], ["2", "1", "2", "0"]],
}
PYRAMID = {
    "points": ["x", "y", "z", "t", "w"],
    "matrix": [
        ["0", "2", "1", "2", "2"], ["2", "0", "2", "1", "2"], ["1", "2", "0", "2", "2"],
        ["2", "1", "2", "0", "2"], ["2", "2", "2", "2", "0"],
    ],
}
BROKEN = {
    "points": ["x", "y", "z", "t"],
    "matrix": [["0", "2", "3", "2"], ["2", "0", "2", "1"], ["3", "2", "0", "2"], ["2", "1", "2", "0"]],
}
SINGLE = {"points": ["a"], "matrix": [["0"]]}
PATH = {
    "vertices": [{"name": "y", "label": "2"}, {"name": "x", "label": "0"}, {"name": "z", "label": "1"}],
    "edges": [["y", "x"], ["x", "z"]],
}


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="doc.json"):
        path = tmp_path / name
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate(capsys, write):
    assert run(capsys, "validate", write(QUADRUPLE)) == (0, "ultrametric: ok, n=4, diam=2\n", "")
    assert run(capsys, "validate", write(SINGLE))[1] == "ultrametric: ok, n=1, diam=0\n"


def test_validate_broken_triple(capsys, write):
    code, out, err = run(capsys, "validate", write(BROKEN))
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert payload["error"] == "StrongTriangleViolation"
    assert payload["witness"] == ["x", "z", "y"]


@pytest.mark.parametrize(
    "doc",
    [
        "{not json",
        {"points": ["a"]},
        {"points": ["a"], "matrix": [["zero"]]},
        {"points": ["a b"], "matrix": [["0"]]},
        {"points": ["a,b"], "matrix": [["0"]]},
        {"points": ["a"], "matrix": "0"},
    ],
)
def test_parse_errors(capsys, write, doc):
    code, _, err = run(capsys, "validate", write(doc))
    assert code == 1
    assert json.loads(err)["error"] == "ParseError"


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "nope.json"))[0] == 1


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(PYRAMID)))
    assert run(capsys, "validate", "-")[1] == "ultrametric: ok, n=5, diam=2\n"


def test_is_ugvl(capsys, write):
    assert run(capsys, "is-ugvl", write(QUADRUPLE))[:2] == (3, "UGVL: no, delta=1\n")
    assert run(capsys, "is-ugvl", write(PYRAMID))[:2] == (0, "UGVL: yes, delta=0\n")
    assert run(capsys, "is-ugvl", write(SINGLE))[:2] == (0, "UGVL: yes, delta=0\n")


def test_generate_tree_refuses_quadruple(capsys, write):
    code, out, err = run(capsys, "generate-tree", write(QUADRUPLE))
    assert code == 3 and out == ""
    payload = json.loads(err)
    assert payload["error"] == "NotUGVL"
    assert payload["ball"] == ["x", "y", "z", "t"]


def test_generate_then_eval_is_byte_exact(capsys, write):
    for doc in (PYRAMID, SINGLE, {"points": ["p", "q", "r"], "matrix": [["0", "5/2", "1.5"], ["5/2", "0", "5/2"], ["1.5", "5/2", "0"]]}):
        code, tree_json, _ = run(capsys, "generate-tree", write(doc, "space.json"))
        assert code == 0
        code, space_json, _ = run(capsys, "eval-tree", write(tree_json, "tree.json"))
        assert code == 0
        canonical = parse_space_document(doc)
        assert json.loads(space_json) == {"points": list(canonical.points), "matrix": canonical.matrix_strings()}
    assert json.loads(space_json)["matrix"][0] == ["0", "5/2", "3/2"]


def test_eval_tree_path(capsys, write):
    code, out, _ = run(capsys, "eval-tree", write(PATH))
    assert code == 0
    assert json.loads(out) == {
        "points": ["y", "x", "z"],
        "matrix": [["0", "2", "2"], ["2", "0", "1"], ["2", "1", "0"]],
    }


def test_eval_tree_star(capsys, write):
    star = {
        "vertices": [{"name": "c", "label": "3"}, {"name": "a", "label": "0"}, {"name": "b", "label": "0"}],
        "edges": [["c", "a"], ["c", "b"]],
    }
    assert json.loads(run(capsys, "eval-tree", write(star))[1])["matrix"] == [
        ["0", "3", "3"], ["3", "0", "3"], ["3", "3", "0"]
    ]


def test_eval_tree_single_vertex(capsys, write):
    doc = {"vertices": [{"name": "a", "label": "0"}], "edges": []}
    assert json.loads(run(capsys, "eval-tree", write(doc))[1]) == SINGLE


def test_eval_tree_zero_edge(capsys, write):
    doc = {
        "vertices": [{"name": "a", "label": "1"}, {"name": "b", "label": "0"}, {"name": "c", "label": "0"}],
        "edges": [["a", "b"], ["b", "c"]],
    }
    code, _, err = run(capsys, "eval-tree", write(doc))
    assert code == 2
    payload = json.loads(err)
    assert payload["error"] == "NotAnUltrametricGenerator"
    assert payload["witness"] == ["b", "c"]


def test_eval_tree_bad_tree(capsys, write):
    doc = {"vertices": [{"name": "a", "label": "1"}, {"name": "b", "label": "0"}], "edges": [["a", "a"]]}
    code, _, err = run(capsys, "eval-tree", write(doc))
    assert code == 2 and json.loads(err)["error"] == "SelfLoop"


def test_representing_tree_json(capsys, write):
    code, out, _ = run(capsys, "representing-tree", write(QUADRUPLE))
    doc = json.loads(out)
    assert code == 0
    assert len(doc["vertices"]) == 7
    assert doc["root"] == "n0"
    assert doc["vertices"][0] == {"name": "n0", "label": "2", "members": ["x", "y", "z", "t"]}
    assert len(json.loads(run(capsys, "representing-tree", write(PYRAMID))[1])["vertices"]) == 8
    assert len(json.loads(run(capsys, "representing-tree", write(SINGLE))[1])["vertices"]) == 1


def test_representing_tree_round_trip(capsys, write):
    out = run(capsys, "representing-tree", write(PYRAMID))[1]
    tree = parse_tree_document(json.loads(out))
    assert isinstance(tree, RootedLabeledTree)
    assert tree.nodes[0].payload == ("x", "y", "z", "t", "w")
    space_json = run(capsys, "eval-tree", write(out, "tree.json"))[1]
    assert isometric(parse_space_document(json.loads(space_json)), parse_space_document(PYRAMID))


def test_representing_tree_dot(capsys, write):
    code, out, _ = run(capsys, "representing-tree", write(QUADRUPLE), "--format", "dot")
    assert code == 0
    assert out.startswith("digraph T {")
    assert '"n0" [label="2 | {x, y, z, t}"];' in out
    assert '"n0" -> "n1";' in out
    assert out.count("->") == 6


def test_generate_tree_dot(capsys, write):
    code, out, _ = run(capsys, "generate-tree", write(PYRAMID), "--format", "dot")
    assert code == 0
    assert out.startswith("graph T {")
    assert '"w" [label="w | 2"];' in out
    assert out.count("--") == 4


def test_dot_without_payload():
    tree = parse_tree_document({
        "vertices": [{"name": "r", "label": "3"}, {"name": "a", "label": "0"}, {"name": "b", "label": "0"}],
        "edges": [["r", "a"], ["r", "b"]],
        "root": "r",
    })
    dot = to_dot(tree)
    assert '"r" [label="r | 3"];' in dot and '"r" -> "a";' in dot


def test_extend(capsys, write):
    code, out, _ = run(capsys, "extend", write(QUADRUPLE))
    assert code == 0
    doc = json.loads(out)
    assert doc["points"] == ["x", "y", "z", "t", "w#1"]
    assert doc["matrix"][4] == ["2", "2", "2", "2", "0"]
    assert doc["embedding"] == {p: p for p in QUADRUPLE["points"]}
    assert doc["added"] == [{"name": "w#1", "for_ball": ["x", "y", "z", "t"]}]
    ext = {"points": doc["points"], "matrix": doc["matrix"]}
    assert run(capsys, "isometric", write(ext, "a.json"), write(PYRAMID, "b.json"))[:2] == (0, "isometric: yes\n")


def test_extend_unchanged(capsys, write):
    for doc in (PYRAMID, SINGLE):
        out = json.loads(run(capsys, "extend", write(doc))[1])
        assert out["points"] == doc["points"] and out["matrix"] == doc["matrix"]
        assert out["added"] == []


def test_isometric(capsys, write):
    renamed = {"points": ["a", "b", "c", "d"], "matrix": QUADRUPLE["matrix"]}
    assert run(capsys, "isometric", write(QUADRUPLE, "a.json"), write(renamed, "b.json"))[:2] == (0, "isometric: yes\n")
    assert run(capsys, "isometric", write(QUADRUPLE, "a.json"), write(PYRAMID, "b.json"))[:2] == (3, "isometric: no\n")


def test_proptest_small(capsys):
    code, out, _ = run(capsys, "proptest", "--seed", "3", "--trials", "25", "--max-points", "6")
    assert code == 0
    assert out.splitlines()[0].startswith("campaign seed=3 trials=25 max_points=6")
    assert out.rstrip().endswith("result: PASS")
    assert run(capsys, "proptest", "--seed", "3", "--trials", "25", "--max-points", "6")[1] == out


def test_proptest_zero_trials(capsys):
    code, out, _ = run(capsys, "proptest", "--trials", "0")
    assert code == 0
    assert "fail=0" in out and out.rstrip().endswith("result: PASS")


def test_proptest_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("ULTRATREE_SEED", "11")
    out = run(capsys, "proptest", "--trials", "2")[1]
    assert out.startswith("campaign seed=11 ")
    assert run(capsys, "proptest", "--seed", "5", "--trials", "2")[1].startswith("campaign seed=5 ")


def test_proptest_reports_failures(capsys):
    from ultratree import campaign

    def broken(inst):
        raise AssertionError("boom")

    report = campaign.run_campaign(0, 2, 4, properties=(("always.fails", broken),))
    assert not report.ok
    lines = report.lines()
    assert lines[-1] == "result: FAIL"
    replay = [line for line in lines if line.strip().startswith("replay:")]
    assert len(replay) == 2
    doc = json.loads(replay[0].split("replay:", 1)[1])
    validate_space(doc["points"], doc["matrix"])


def test_document_errors():
    with pytest.raises(DocumentError):
        parse_tree_document({"vertices": [{"name": "a"}]})
    with pytest.raises(DocumentError):
        parse_tree_document({"vertices": [{"name": "a", "label": "0"}], "root": "b"})
    with pytest.raises(DocumentError):
        parse_tree_document({"vertices": [{"name": "a", "label": "0"}], "edges": [["a"]]})
