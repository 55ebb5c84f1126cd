import pytest

from gscat.core import LawChecker
from gscat.errors import MissingPreorder, UsageError
from gscat.suites import (check_presentation, completeness_reports, expect_failure, monad_reports, presentation,
                          report_all)
from test.gsctest import assert_fails, assert_passes, small_config, terminal_presentation_document, write_document


def _report(ok):
    checker = LawChecker("inner")
    checker.expect("law", ok, lhs=1, rhs=2)
    return checker.report()


def test_presentation_selection(tmp_path):
    assert presentation(small_config(model="pspan", apex_bound=2)).name == "pspan"
    assert presentation(small_config(model="kleisli:lifting")).name == "kleisli[lifting]"
    assert presentation(small_config(order="reversed")).name == "finrel[reversed]"
    assert presentation(small_config(order="generated")).name == "finrel[generated]"
    path = write_document(tmp_path, "t.json", terminal_presentation_document(leq=False))
    assert presentation(small_config(presentation=path)).name == "terminal"
    with pytest.raises(UsageError):
        presentation(small_config(order="upside-down"))
    with pytest.raises(UsageError):
        presentation(small_config(model="vect"))


def test_checks_by_name(tmp_path):
    config = small_config()
    P = presentation(config)
    assert len(check_presentation(P, "weakproduct", config)) == 3
    assert_fails(check_presentation(presentation(small_config(order="reversed")), "oplax", config)[0],
                 "discharge-inequality")
    with pytest.raises(UsageError):
        check_presentation(P, "cartesian", config)
    path = write_document(tmp_path, "t.json", terminal_presentation_document(leq=False))
    with pytest.raises(MissingPreorder):
        check_presentation(presentation(small_config(presentation=path)), "oplax", config)


def test_expect_failure():
    assert_passes(expect_failure(_report(False)))
    assert_passes(expect_failure(_report(False), "law"))
    assert_fails(expect_failure(_report(True)), "fails")
    assert_fails(expect_failure(_report(False), "other-law"), "fails")
    assert any("witness" in n for n in expect_failure(_report(False)).notes)


def test_monad_reports():
    config = small_config()
    for report in monad_reports("writer:1", config):
        assert_passes(report)
    writer = monad_reports("writer:2", config)
    assert len(writer) == 5
    assert writer[3].name == "colax-cartesian[F_writer:2]"
    assert_fails(writer[1], "dup")
    assert all(r.passed for r in writer if r is not writer[1])


@pytest.mark.parametrize("suite", ["finrel", "kleisli", "writer", "pspan", "finstoch"])
def test_suites_pass(suite):
    reports = report_all(small_config(apex_bound=2), [suite])
    assert [r.name for r in reports] == [suite]
    assert_passes(reports[0])


def test_unknown_suite():
    with pytest.raises(UsageError):
        report_all(small_config(), ["everything"])


def test_monad_reports_check_both_adjoints_colax_cartesian():
    names = [r.name for r in monad_reports("powerset", small_config())]
    assert "colax-cartesian[F_powerset]" in names
    assert any(name.startswith("colax-cartesian[G_") for name in names)


def test_completeness_uses_every_size():
    reports = completeness_reports(small_config(sizes=(1, 2, 4), max_instances=32))
    assert [r.name for r in reports[:3]] == ["colax-bicartesian[finrel({0},-)]".format(X) for X in (1, 2, 4)]
    for report in reports:
        assert_passes(report)
    assert not reports[2].exhaustive
    assert any("sampled points" in note for note in reports[2].notes)
