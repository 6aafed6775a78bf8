import pytest

from app.selftest import CheckResult, run_selftest


def test_check_result_render():
    assert CheckResult("x", 1, 1).render() == "ok x"
    assert CheckResult("x", 1, 2).render() == "FAIL x: expected 1, got 2"
    assert CheckResult("x", None, None, error="boom").render() == "FAIL x: boom"


@pytest.mark.slow
def test_full_selftest_passes():
    results = run_selftest(table_dmax=9, veblen_dmax=7)
    assert [r.render() for r in results if not r.ok] == []
