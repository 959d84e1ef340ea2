"""Verification report machinery at small sweeps."""

import pytest

import spreadpoly.factor as factor_mod
from spreadpoly import run_suite, run_verification
from spreadpoly.verify import SUITES


def test_small_sweep_all_pass():
    report = run_verification(sweep=12, instances=25)
    assert report.passed
    assert len(report.suites) >= 12
    for suite in report.suites:
        assert suite.failures == 0
        assert suite.first_failure is None
    assert "passed" in report.to_text()


def test_degenerate_sweep_passes():
    report = run_verification(sweep=1, instances=5)
    assert report.passed


def test_suite_subset_selection():
    report = run_verification(
        sweep=10, instances=5, names=("zpread-two-routes", "phi-route-agreement")
    )
    assert [s.name for s in report.suites] == [
        "zpread-two-routes",
        "phi-route-agreement",
    ]
    assert report.passed


def test_corrupted_route_is_caught_and_reported():
    with factor_mod.corrupted_phi(9):
        result = run_suite("phi-route-agreement", sweep=20)
    assert not result.passed
    assert result.failures == 1
    assert "n=9" in result.first_failure
    assert "routes disagree" in result.first_failure


def test_suite_results_are_deterministic():
    first = run_suite("ring-axioms", instances=40)
    second = run_suite("ring-axioms", instances=40)
    assert first.to_record() == second.to_record()


def test_record_shape_excludes_timing():
    result = run_suite("zpread-zero-at-origin", sweep=5)
    record = result.to_record()
    assert record == {
        "kind": "verify",
        "name": "zpread-zero-at-origin",
        "checks": 5,
        "failures": 0,
        "first_failure": None,
        "status": "pass",
    }


def test_every_registered_suite_runs():
    report = run_verification(sweep=6, instances=5)
    assert [s.name for s in report.suites] == [name for name, _ in SUITES]


def test_bad_parameters():
    with pytest.raises(ValueError):
        run_verification(sweep=0)
    with pytest.raises(ValueError):
        run_verification(tolerance=0.0)
    with pytest.raises(KeyError):
        run_suite("no-such-suite")
