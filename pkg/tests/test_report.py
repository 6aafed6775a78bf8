from fractions import Fraction

import pytest

from app.exceptions import InvalidHypergraphError
from app.presets import gamma
from app.report import DISCREPANCY, catalogue_report, formula_report_3graphs


def _line(report, label):
    return next(line for line in report.lines if line.label == label)


def test_rowling_low_codegrees_agree(rowling):
    report = formula_report_3graphs(rowling)
    for label in ("c_3", "c_4", "c_5", "c_6"):
        assert _line(report, label).ok, label
    assert _line(report, "c_3").computed == -240
    assert _line(report, "c_6").computed == 28320


def test_rowling_c9_bracket_is_flagged(rowling):
    line = _line(formula_report_3graphs(rowling), "c_9 connected part")
    assert not line.ok
    assert (line.printed, line.computed) == (-2114, -2060)
    assert line.render().startswith(DISCREPANCY)


def test_report_needs_3graphs(triangle):
    with pytest.raises(InvalidHypergraphError):
        formula_report_3graphs(triangle)


def test_catalogue_report():
    report = catalogue_report()
    flagged = {line.label.split(")")[0] for line in report.discrepancies()}
    assert flagged == {"C(Gamma_{6,10}", "C(Gamma_{9,4}"}
    line = next(line for line in report.lines if line.label.startswith("C(Gamma_{6,10})"))
    assert (line.printed, line.computed) == (Fraction(117, 16), Fraction(117, 32))
    assert report.render().startswith("# catalogue")


def test_single_entry_report():
    report = catalogue_report([gamma("12,3")])
    assert len(report.lines) == 2
    assert report.lines[0].computed == Fraction(81, 128)
    assert report.lines[1].computed == 3
