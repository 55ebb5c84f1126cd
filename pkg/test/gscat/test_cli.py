import json
import os

import pytest
import yaml

import gscat as gscat_pkg
from gscat.cli import run
from gscat.models import to_document
from gscat.termgraph import Operation, sharing_pair, tg_from_op
from test.gsctest import terminal_presentation_document, write_document

F = Operation("f", ["A"], ["B"])


@pytest.fixture
def gscat(tmp_path, monkeypatch, capsys):
    for key in ("CAP", "SEED", "SIZES", "SAMPLES", "MAX_INSTANCES", "FORMAT"):
        monkeypatch.delenv("GSCAT_" + key, raising=False)
    config = str(tmp_path / "absent.conf")

    def _run(*argv):
        code = run(list(argv) + ["--config", config, "--max-instances", "256"])
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def test_finrel_is_gs(gscat):
    code, out, _ = gscat("check", "gs", "--model", "finrel", "--sizes", "1,2,4")
    assert code == 0
    assert out.strip().endswith("PASS")


def test_reversed_order_fails(gscat):
    code, out, _ = gscat("check", "oplax", "--model", "finrel", "--order", "reversed", "--sizes", "1,2")
    assert code == 1
    assert "discharge-inequality" in out
    assert out.strip().endswith("FAIL")


def test_usage_errors(gscat, tmp_path):
    assert gscat("check", "nonsense")[0] == 2
    code, _, err = gscat("check", "gs", "--model", "vect")
    assert code == 2
    assert "Unknown model vect" in err
    path = write_document(tmp_path, "t.json", terminal_presentation_document(leq=False))
    code, _, err = gscat("check", "oplax", "--presentation", path)
    assert code == 2
    assert "preorder" in err


def test_presentation_fixture(gscat, tmp_path):
    path = write_document(tmp_path, "t.json", terminal_presentation_document())
    assert gscat("check", "oplax", "--presentation", path)[0] == 0


def test_span_commands(gscat, tmp_path):
    s = write_document(tmp_path, "s.json", {"kind": "span", "src": 1, "tgt": 2, "left": [0, 0], "right": [0, 1]})
    t = write_document(tmp_path, "t.json", {"kind": "span", "src": 2, "tgt": 1, "left": [0, 1, 1],
                                            "right": [0, 0, 0]})
    code, out, _ = gscat("span", "compose", s, t)
    assert code == 0
    assert out.strip() == "composite: 1->1:[(0,0),(0,0),(0,0)]"
    code, out, _ = gscat("span", "leq", s, s)
    assert code == 0
    assert "leq: True" in out


def test_json_output_is_deterministic(gscat, tmp_path):
    f = write_document(tmp_path, "f.json", {"kind": "stoch", "src": 2, "tgt": 2, "rows": [[1, 0], ["1/2", "1/2"]]})
    first = gscat("stoch", "support", f, "--format", "json")
    second = gscat("stoch", "support", f, "--format", "json")
    assert first == second
    document = json.loads(first[1])
    assert document["schema"] == "gscat-report/1"
    assert document["command"] == ["stoch", "support"]
    assert document["passed"] is True
    assert document["results"][0]["value"]["pairs"] == [[0, 0], [1, 0], [1, 1]]
    with open(os.path.join(os.path.dirname(gscat_pkg.__file__), "schemas", "report.yaml")) as f:
        schema = yaml.safe_load(f)
    assert set(schema["required"]) <= set(document)
    assert set(document) <= set(schema["properties"])


def test_termgraph_commands(gscat, tmp_path):
    graph = write_document(tmp_path, "g.json", to_document(tg_from_op(F)))
    assignment = write_document(tmp_path, "a.json", {"kind": "assignment", "model": "finrel",
                                                     "sorts": {"A": 2, "B": 1},
                                                     "ops": {"f": {"src": 2, "tgt": 1, "pairs": [[1, 0]]}}})
    code, out, _ = gscat("termgraph", "eval", graph, assignment)
    assert code == 0
    assert out.strip() == "value: 2->1:{(1,0)}"
    shared, copied = sharing_pair(F)
    s = write_document(tmp_path, "s.json", to_document(shared))
    c = write_document(tmp_path, "c.json", to_document(copied))
    assert gscat("termgraph", "equal", s, c)[1].strip() == "equal: False"
    assert gscat("termgraph", "equal", s, s)[1].strip() == "equal: True"


def test_monad_commands(gscat):
    assert gscat("monad", "laws", "--monad", "writer:2")[0] == 0
    code, out, _ = gscat("monad", "gs", "--monad", "writer:2")
    assert code == 1
    assert "dup" in out
    code, out, _ = gscat("kleisli", "build", "--monad", "lifting", "--sizes", "1,2")
    assert code == 0
    assert "hom(2, 2): 9" in out
    assert gscat("kleisli", "build")[0] == 2


def test_bounded_checks_note_skipped_sizes(gscat):
    code, out, _ = gscat("stoch", "check", "--sizes", "1,2,4", "--samples", "5")
    assert code == 0
    assert "note: support check runs on sizes up to 3; skipped 4" in out
    code, out, _ = gscat("stoch", "check", "--sizes", "1,2", "--samples", "5")
    assert code == 0
    assert "skipped" not in out
