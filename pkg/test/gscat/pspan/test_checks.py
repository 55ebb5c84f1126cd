import pytest

from gscat.core import check_dup_discharge_uniqueness, check_gs_axioms, check_oplax_cartesian, is_weakly_functional
from gscat.errors import Infeasible
from gscat.pspan import Span, check_span_predicates, check_two_cell_criterion, pspan_presentation, span_dup_repeated
from test.gsctest import SMALL_BUDGET, assert_passes


def test_presentation_cap():
    with pytest.raises(Infeasible):
        pspan_presentation((1, 4), apex_bound=4, cap=1000)


def test_pspan_is_oplax_cartesian():
    P = pspan_presentation((1, 2, 4), apex_bound=2)
    assert_passes(check_gs_axioms(P, **SMALL_BUDGET))
    assert_passes(check_oplax_cartesian(P, **SMALL_BUDGET))


def test_weakly_functional_span_duplicated_pair():
    P = pspan_presentation((1, 2), apex_bound=2)
    assert is_weakly_functional(P, Span.from_pairs(1, 1, [(0, 0), (0, 0)]))
    assert not is_weakly_functional(P, Span.from_pairs(1, 2, [(0, 0), (0, 1)]))


def test_span_checks():
    assert_passes(check_two_cell_criterion((1, 2), apex_bound=2))
    assert_passes(check_span_predicates((1, 2), apex_bound=2))


def test_repeated_duplicator_is_equivalent_but_not_equal():
    P = pspan_presentation((1, 2, 4), apex_bound=2)
    report = check_dup_discharge_uniqueness(P, span_dup_repeated, None)
    assert_passes(report)
    assert report.counts["dup-equivalent"] == 2
    assert any("dup(2) equivalent but not equal" in note for note in report.notes)
