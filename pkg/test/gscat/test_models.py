import json

import pytest

from gscat.core import check_gs_axioms
from gscat.errors import FixtureError
from gscat.finrel import Rel
from gscat.finstoch import StochMatrix
from gscat.models import (AssignmentFixture, KleisliFixture, RelationFixture, TermGraphFixture, dump_json,
                          fixture_class, load_fixture, to_document)
from gscat.monads import KleisliMorphism, open_kleisli
from gscat.preord import FinPreord, MonotoneMap
from gscat.termgraph import Assignment, Operation, sharing_pair
from test.gsctest import SMALL_BUDGET, assert_passes, terminal_presentation_document, write_document


def test_relation_document(tmp_path):
    path = write_document(tmp_path, "r.json", {"kind": "relation", "src": 2, "tgt": 2, "pairs": [[1, 0], [0, 1]]})
    R = load_fixture(path)
    assert R == Rel.from_pairs(2, 2, [(0, 1), (1, 0)])
    assert to_document(R) == {"kind": "relation", "pairs": [[0, 1], [1, 0]], "src": 2, "tgt": 2}


def test_yaml_documents_are_accepted(tmp_path):
    path = tmp_path / "f.yaml"
    path.write_text("kind: stoch\nsrc: 1\ntgt: 2\nrows:\n  - ['1/3', '2/3']\n")
    assert load_fixture(str(path)) == StochMatrix(1, 2, [["1/3", "2/3"]])


def test_fixture_errors(tmp_path):
    with pytest.raises(FixtureError) as excinfo:
        load_fixture(write_document(tmp_path, "a.json", {"kind": "relation", "tgt": 2}))
    assert "src" in str(excinfo.value)
    with pytest.raises(FixtureError):
        load_fixture(write_document(tmp_path, "b.json", {"kind": "span", "src": 1}), kind="relation")
    with pytest.raises(FixtureError):
        load_fixture(write_document(tmp_path, "c.json", {"kind": "hypergraph"}))
    with pytest.raises(FixtureError):
        load_fixture(write_document(tmp_path, "d.json", {"src": 1, "tgt": 1}))
    with pytest.raises(FixtureError) as excinfo:
        load_fixture(write_document(tmp_path, "e.json", {"kind": "relation", "src": 1, "tgt": 1,
                                                         "pairs": [[0, 3]]}))
    assert excinfo.value.path.endswith("e.json")
    with pytest.raises(FixtureError):
        load_fixture(str(tmp_path / "missing.json"))


def test_kleisli_document():
    f = KleisliFixture({"monad": "lifting", "src": 2, "tgt": 2, "table": [None, 1]}).build()
    assert f == open_kleisli("lifting").model.morphism(2, 2, [None, (1,)])
    assert to_document(f)["table"] == [None, 1]
    with pytest.raises(FixtureError):
        KleisliFixture({"monad": "lifting", "src": 2, "tgt": 2, "table": [0]}).build()


def test_monotone_map_document():
    C2 = FinPreord.chain(2)
    f = MonotoneMap(C2, C2, values=[1, 1])
    document = to_document(f)
    assert document["src"]["leq_pairs"] == [[0, 1]]
    assert fixture_class(document["kind"])(document).build() == f


def test_term_graph_document_checks_declared_wiring():
    shared, _ = sharing_pair(Operation("f", ["A"], ["B"]))
    document = to_document(shared)
    assert document["wires"][1]["consumers"] == [["out", 0], ["out", 1]]
    assert TermGraphFixture(document).build().outputs == shared.outputs
    document["wires"][1]["producer"] = ["in", 0]
    with pytest.raises(FixtureError):
        TermGraphFixture(document).build()


def test_presentation_document(tmp_path):
    P = load_fixture(write_document(tmp_path, "t.json", terminal_presentation_document()))
    assert P.name == "terminal"
    assert_passes(check_gs_axioms(P, **SMALL_BUDGET))
    broken = terminal_presentation_document()
    broken["compose"] = [["id", "id", "nope"]]
    with pytest.raises(FixtureError):
        load_fixture(write_document(tmp_path, "u.json", broken))


def test_assignment_documents():
    alpha = AssignmentFixture({"model": "finrel", "sorts": {"A": 1, "B": 2},
                               "ops": {"f": {"src": 1, "tgt": 2, "pairs": [[0, 1]]}}}).build()
    assert isinstance(alpha, Assignment)
    assert alpha.ops["f"] == Rel.from_pairs(1, 2, [(0, 1)])
    lifted = AssignmentFixture({"model": "kleisli:lifting", "sorts": {"A": 2},
                                "ops": {"g": {"src": 2, "tgt": 2, "table": [None, 0]}}}).build()
    assert isinstance(lifted.ops["g"], KleisliMorphism)
    assert lifted.ops["g"].monad.name == "lifting"
    with pytest.raises(FixtureError):
        AssignmentFixture({"model": "finrel", "sorts": {}, "ops": {"f": [1]}}).build()
    with pytest.raises(FixtureError):
        AssignmentFixture({"model": "preord", "sorts": {}, "ops": {"f": {}}}).build()


def test_dump_json_is_deterministic():
    document = RelationFixture.from_object(Rel.from_pairs(1, 2, [(0, 1)])).to_document()
    text = dump_json(document)
    assert text == dump_json(json.loads(text))
    assert text.index('"kind"') < text.index('"pairs"') < text.index('"src"')
