from gscat.finstoch import finstoch_presentation, open_finstoch, support_functor
from gscat.finstoch import check_support_oplax
from test.gsctest import assert_passes


def test_sampled_presentation_lists_squares():
    P = finstoch_presentation((1, 2, 3))
    assert P.object_list() == [1, 2, 3, 4, 9]
    assert not P.hom(1, 2).finite


def test_bounded_presentation():
    P = finstoch_presentation((1, 2), max_denominator=2)
    assert P.object_list() == [1, 2]
    assert len(P.hom(2, 2)) == 9


def test_support_functor_targets_finrel():
    F = support_functor(open_finstoch())
    assert F.target.name == "finrel"


def test_support_oplax():
    report = check_support_oplax(samples=20, sizes=(1, 2), seed=3, max_denominator=2)
    assert_passes(report)
    assert any("supports are total" in n for n in report.notes)
