"""Tests for report rendering and persistence."""

import io

import pytest
from rich.console import Console

import reports.suite_report as suite_report
from core.models import IdentityOutcome, SuiteReport, TrialFailure
from harness.runner import run_suite
from reports.suite_report import load_report, render_report, save_report


@pytest.fixture
def failing() -> SuiteReport:
    failure = TrialFailure(trial=3, identity="closure", inputs={"A": "@x1^@x2"}, defect="2 @x1")
    return SuiteReport(
        suite="gerstenhaber",
        seed=7,
        trials=5,
        passed=False,
        identities=[
            IdentityOutcome(name="closure", checks=5, passed=False, counterexample=failure),
            IdentityOutcome(name="graded-jacobi", checks=5),
        ],
        failures=[failure],
        millis=12,
    )


def rendered(report: SuiteReport, verbose: bool = False) -> str:
    out = io.StringIO()
    render_report(report, Console(file=out, width=140), verbose=verbose)
    return out.getvalue()


class TestRender:
    def test_passing_suite(self, cfg):
        text = rendered(run_suite("appendix-b", cfg, trials=1))
        assert "appendix-b" in text
        assert "PASS" in text
        assert "FAIL" not in text

    def test_failure_panel(self, failing):
        text = rendered(failing)
        assert "closure (trial 3)" in text
        assert "A = @x1^@x2" in text
        assert "defect = 2 @x1" in text
        assert "Overall: FAIL" in text

    def test_all_overview(self, cfg):
        report = run_suite("all", cfg, trials=1)
        quiet, verbose = rendered(report), rendered(report, verbose=True)
        assert "omega-d-antisym" in quiet
        assert "anticommutativity" not in quiet
        assert "anticommutativity" in verbose


class TestSummary:
    def test_text(self, failing):
        text = failing.summary()
        assert "SUITE: gerstenhaber   [FAIL]" in text
        assert "defect = 2 @x1" in text

    def test_json_omits_description(self, failing):
        assert "description" not in failing.to_json()


class TestPersistence:
    def test_explicit_path(self, tmp_path, failing):
        path = save_report(failing, tmp_path / "nested" / "report.json")
        assert path.exists()
        assert load_report(path) == failing

    def test_default_path(self, tmp_path, monkeypatch, failing):
        monkeypatch.setattr(suite_report, "REPORTS_DIR", tmp_path)
        path = save_report(failing)
        assert path.parent == tmp_path
        assert path.name.startswith("gerstenhaber_7_")
        assert path.suffix == ".json"
