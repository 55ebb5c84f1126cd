import pytest

from gscat.core import check_category_and_monoidal, check_gs_axioms, check_oplax_cartesian
from gscat.errors import Infeasible, UsageError
from gscat.finrel import as_presentation, check_relation_predicates
from test.gsctest import SMALL_BUDGET, assert_fails, assert_passes


def test_truncation():
    P = as_presentation(max_size=2)
    assert P.object_list() == [1, 2]
    with pytest.raises(Infeasible):
        as_presentation(object_list=(1, 5), cap=1024)
    with pytest.raises(UsageError):
        as_presentation()
    with pytest.raises(UsageError):
        as_presentation(max_size=2, order="sideways")


def test_finrel_is_oplax_cartesian():
    P = as_presentation(object_list=(1, 2, 4))
    assert_passes(check_category_and_monoidal(P, **SMALL_BUDGET))
    assert_passes(check_gs_axioms(P, **SMALL_BUDGET))
    assert_passes(check_oplax_cartesian(P, **SMALL_BUDGET))


def test_reversed_finrel_is_not_oplax():
    P = as_presentation(object_list=(1, 2), order="reversed")
    assert P.name == "finrel[reversed]"
    assert_fails(check_oplax_cartesian(P, **SMALL_BUDGET), "discharge-inequality")


def test_relation_predicates():
    report = check_relation_predicates(2)
    assert_passes(report)
    assert report.exhaustive
