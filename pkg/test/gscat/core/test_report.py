from gscat.core.report import LawChecker, LawReport, Witness, merge_reports


def test_checker_keeps_first_failure():
    checker = LawChecker("demo")
    assert checker.expect("law", True, a=1)
    assert not checker.expect("law", False, 1, 2, a=2)
    assert not checker.expect("law", False, 3, 4, a=3)
    report = checker.report()
    assert report.counts["law"] == 2
    assert len(report.failures) == 1
    assert report.witness.items["a"] == "2"
    assert report.witness.lhs == "1"
    assert report.verdict == "fail"


def test_inactive_law_stops_counting():
    checker = LawChecker("demo")
    checker.expect("law", False)
    assert not checker.active("law")
    checker.expect_equal("law", 1, 1, lambda x, y: x == y)
    assert checker.report().counts["law"] == 1


def test_merge_prefixes_law_names():
    first = LawChecker("first")
    first.expect("a", True)
    first.note("sampled")
    second = LawChecker("second")
    second.expect("b", False, "x", "y")
    merged = merge_reports("both", [first.report(), second.report()])
    assert list(merged.counts) == ["first/a", "second/b"]
    assert merged.failed_laws() == ["second/b"]
    assert merged.notes == ["first: sampled"]
    assert merged.checked_count == 2


def test_report_dict_field_order():
    report = LawReport("r", {"law": 3}, [Witness("law", {"f": "x"}, "l", "r")], exhaustive=False)
    document = report.to_dict()
    assert list(document) == ["name", "verdict", "checked_count", "exhaustive", "counts", "witness", "failures",
                              "notes"]
    assert document["witness"] == {"law": "law", "items": {"f": "x"}, "lhs": "l", "rhs": "r"}
    assert "witness: law [f=x]: l vs r" in str(report)
