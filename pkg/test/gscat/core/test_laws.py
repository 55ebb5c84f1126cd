import pytest

from gscat.core import GsPresentation, TableModel
from gscat.core.laws import check_category_and_monoidal, check_gs_axioms, check_oplax_cartesian
from gscat.errors import MalformedPresentation, MissingPreorder
from gscat.finrel import FinRelModel, Rel, as_presentation, rel_id
from gscat.models import PresentationFixture
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes, terminal_presentation_document


def _terminal(leq=True):
    return PresentationFixture(terminal_presentation_document(leq)).build()


def test_finrel_is_gs_monoidal_and_oplax():
    P = as_presentation(object_list=(1, 2, 4))
    assert_passes(check_category_and_monoidal(P, **SMALL_BUDGET))
    assert_passes(check_gs_axioms(P, **SMALL_BUDGET))
    assert_passes(check_oplax_cartesian(P, **SMALL_BUDGET))


def test_reversed_inclusion_is_not_oplax():
    P = as_presentation(object_list=(1, 2), order="reversed")
    report = check_oplax_cartesian(P, **SMALL_BUDGET)
    witness = assert_fails(report, "discharge-inequality")
    assert witness.lhs is not None and witness.rhs is not None


def test_trivial_order_breaks_dup_inequality():
    P = as_presentation(object_list=(1, 2, 4), order="trivial")
    assert_fails(check_oplax_cartesian(P, **SMALL_BUDGET), "dup-inequality")


def test_terminal_fixture_passes():
    P = _terminal()
    assert_passes(check_category_and_monoidal(P))
    assert_passes(check_gs_axioms(P))
    assert_passes(check_oplax_cartesian(P))


def test_oplax_needs_order():
    with pytest.raises(MissingPreorder):
        check_oplax_cartesian(_terminal(leq=False))


def test_bad_table_is_rejected():
    model = TableModel(objects=["I"], unit="I", tensor_obj={("I", "I"): "I"}, morphisms={"id": ("I", "I")},
                       compose={("id", "id"): "nope"}, identity={"I": "id"}, tensor_mor={("id", "id"): "id"},
                       symmetry={("I", "I"): "id"}, dup={"I": "id"}, discharge={"I": "id"})
    with pytest.raises(MalformedPresentation):
        check_category_and_monoidal(GsPresentation(model, ["I"]))


def test_restructured_presentation_breaks_counitality():
    P = as_presentation(object_list=(1, 2, 4))
    empty = dict((n, Rel(n, n * n)) for n in (1, 2, 4))
    broken = P.with_structure(dup=empty)
    assert_fails(check_gs_axioms(broken), "counitality-left")


def test_sampled_laws_are_flagged():
    P = as_presentation(object_list=(1, 2, 4))
    report = check_category_and_monoidal(P, max_instances=16, seed=3)
    assert not report.exhaustive
    assert report.passed


class _ShortcutCompose(FinRelModel):
    """Composes the full relation 2 -> 1 after the full relation 1 -> 2 to the empty relation."""
    def compose(self, g, f):
        if (f.src, f.tgt, g.src, g.tgt) == (1, 2, 2, 1) and f.matrix.all() and g.matrix.all():
            return Rel(1, 1)
        return FinRelModel.compose(self, g, f)


class _SquareSymmetryIsIdentity(FinRelModel):
    def symmetry(self, a, b):
        if (a, b) == (2, 2):
            return rel_id(4)
        return FinRelModel.symmetry(self, a, b)


def test_corrupted_composition_breaks_associativity():
    P = GsPresentation(_ShortcutCompose(), (1, 2), name="finrel-shortcut")
    report = check_category_and_monoidal(P, max_instances=20000, seed=0)
    witness = assert_fails(report, "associativity")
    assert [k for k, _ in witness.items] == ["f", "g", "h"]


def test_corrupted_symmetry_breaks_hexagon_outside_object_list():
    P = GsPresentation(_SquareSymmetryIsIdentity(), (1, 2, 4), name="finrel-flat-symmetry")
    witness = assert_fails(check_category_and_monoidal(P, **SMALL_BUDGET), "hexagon")
    assert (witness.values["a"], witness.values["b"], witness.values["c"]) == (2, 2, 2)
    assert P.obj(2, 2, 2) is None
    assert_passes(check_category_and_monoidal(as_presentation(object_list=(1, 2, 4)), **SMALL_BUDGET))
