from gscat.core import check_gs_axioms, check_oplax_cartesian
from gscat.finrel import Rel, rel_compose, rel_id
from gscat.functors import check_functoriality
from gscat.preord import (FinPreord, MonotoneMap, check_hypograph_functoriality, completeness_experiment,
                          hom_functor_to_preord, hypograph, hypograph_functor, identity_map, preord_presentation)
from gscat.finrel import as_presentation
from gscat.functors import check_colax_bicartesian
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes


def test_hypograph_of_identity():
    C2 = FinPreord.chain(2)
    assert hypograph(identity_map(C2)) == Rel.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)])
    D2 = FinPreord.discrete(2)
    assert hypograph(identity_map(D2)) == rel_id(2)


def test_hypograph_preserves_composition():
    C2, C3 = FinPreord.chain(2), FinPreord.chain(3)
    f = MonotoneMap(C2, C3, values=[0, 2])
    g = MonotoneMap(C3, C2, values=[0, 1, 1])
    assert hypograph(MonotoneMap(C2, C2, values=[0, 1])) == rel_compose(hypograph(g), hypograph(f))


def test_hypograph_is_not_a_functor():
    assert_fails(check_functoriality(hypograph_functor(), **SMALL_BUDGET), "identity")


def test_hypograph_functoriality():
    report = check_hypograph_functoriality(2, **SMALL_BUDGET)
    assert_passes(report)


def test_preord_is_cartesian():
    P = preord_presentation(max_size=2)
    assert_passes(check_gs_axioms(P, **SMALL_BUDGET))
    assert_passes(check_oplax_cartesian(P, **SMALL_BUDGET))


def test_representables_of_finrel():
    P = as_presentation(object_list=(1, 2))
    assert_passes(check_colax_bicartesian(hom_functor_to_preord(P, 1), **SMALL_BUDGET))
    pairs = [(f, g) for f in P.hom(1, 2) for g in P.hom(1, 2)]
    report = completeness_experiment(P, pairs)
    assert_passes(report)
    assert report.counts["yoneda-separation"] == 16


def test_sampled_comparisons_mark_functor_reports():
    P = as_presentation(object_list=(1, 2))
    F = hom_functor_to_preord(P, 2, pointwise_limit=2)
    report = check_colax_bicartesian(F, **SMALL_BUDGET)
    assert_passes(report)
    assert F.target.model.sampled_comparisons > 0
    assert not report.exhaustive
    assert any("comparisons decided on sampled points" in note for note in report.notes)


def test_completeness_with_sampled_points():
    P = as_presentation(object_list=(1, 2))
    pairs = [(f, g) for f in P.hom(2, 2) for g in P.hom(2, 2)]
    report = completeness_experiment(P, pairs, max_points=2)
    assert_passes(report)
    assert not report.exhaustive
    assert any("sampled points" in note for note in report.notes)
