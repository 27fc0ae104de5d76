"""Tests for the identity suites and the runner."""

import pytest

from algebra.exterior import Chart, Form
from core.config import GeneratorConfig, SuitesConfig
from core.exceptions import UnknownSuiteError
from core.models import SuiteId
from harness.generators import RandomSource
from harness.runner import SuiteRunner, run_suite
from harness.suites import ALL, SUITES, Check, bumped_dimension, poisson_structure, suite_names


class TestRegistry:
    def test_ids_match_enum(self):
        assert set(suite_names()) == {s.value for s in SuiteId}
        assert suite_names()[-1] == ALL

    def test_every_suite_declares_identities(self):
        for suite in SUITES.values():
            assert suite.identities
            assert suite.description
            assert suite.default_trials > 0

    def test_bumped_dimension(self):
        assert bumped_dimension(GeneratorConfig(dimension=3, ambient=2)) == 4
        assert bumped_dimension(GeneratorConfig(dimension=6, ambient=5)) == 6
        assert bumped_dimension(GeneratorConfig(dimension=5, ambient=1)) == 5

    def test_poisson_structures_cycle(self, cfg):
        dims = [poisson_structure(RandomSource(cfg, trial)).context.n for trial in range(4)]
        assert dims == [1, 2, 3, 1]
        volume4 = poisson_structure(RandomSource(cfg, 2))
        assert volume4.chart.dimension == 4
        assert volume4.omega == Form.basis(volume4.chart, [0, 1, 2, 3])


class TestCheck:
    def test_passes_on_zero_defect(self, xyz):
        assert Check("zero", Form.zero(xyz, 1)).passed
        assert Check("none", None).passed
        assert not Check("nonzero", Form.basis(xyz, [0])).passed

    def test_renders_polynomials_with_chart_names(self, xyz):
        check = Check("poly", xyz.variable("y"), {"f": xyz.variable("x")}, xyz)
        assert check.rendered_defect() == "y"
        assert check.rendered_inputs() == {"f": "x"}

    def test_renders_plain_values(self):
        chart = Chart(("q", "p"))
        check = Check("swap", Form.basis(chart, [0, 1]), {"swap": "1<->2"})
        assert check.rendered_inputs() == {"swap": "1<->2"}
        assert check.rendered_defect() == "dq^dp"


class TestSuitesPass:
    @pytest.mark.parametrize("name", list(SUITES))
    def test_suite_passes(self, cfg, name):
        report = run_suite(name, cfg, trials=4)
        assert report.passed, report.summary()
        assert report.trials == 4
        assert not report.failures
        assert {o.name for o in report.identities} == set(SUITES[name].identities)

    @pytest.mark.parametrize("name", ["gerstenhaber", "td-cross-oracle", "poisson-anticomm"])
    def test_other_seed_and_dimension(self, name):
        cfg = GeneratorConfig(seed=0xDEADBEEF, dimension=4, ambient=3, max_poly_degree=1)
        assert run_suite(name, cfg, trials=3).passed

    def test_witnesses_checked_on_first_trial(self, cfg):
        report = run_suite("td-cross-oracle", cfg, trials=1)
        checks = {o.name: o.checks for o in report.identities}
        assert checks["nonintegrable-witness-direct"] == 1
        assert checks["nonintegrable-witness-bivector"] == 1

    def test_fixed_brackets_checked(self, cfg):
        report = run_suite("poisson-anticomm", cfg, trials=2)
        checks = {o.name: o.checks for o in report.identities}
        assert checks["bracket-q-p"] == 1
        assert checks["bracket-zdx-xdy"] == 1
        assert checks["anticommutativity"] == 2


class TestMutation:
    @pytest.mark.parametrize("name", ["gerstenhaber", "prop-a3", "schouten-axioms"])
    def test_flipped_schouten_sign_is_caught(self, cfg, name):
        report = run_suite(name, cfg, trials=10, flip_schouten_sign=True)
        assert not report.passed
        failure = report.failures[0]
        assert failure.defect != "0"
        assert failure.inputs

    def test_flip_does_not_leak(self, cfg):
        run_suite("prop-a3", cfg, trials=2, flip_schouten_sign=True)
        assert run_suite("prop-a3", cfg, trials=2).passed


class TestRunner:
    def test_deterministic(self, cfg):
        first = run_suite("pairing-symmetry", cfg, trials=5)
        second = run_suite("pairing-symmetry", cfg, trials=5)
        assert first.without_timing() == second.without_timing()

    def test_unknown_suite(self, cfg):
        with pytest.raises(UnknownSuiteError, match="no-such-suite"):
            SuiteRunner(cfg).run("no-such-suite")

    def test_trials_from_settings(self, cfg):
        runner = SuiteRunner(cfg, SuitesConfig(default_trials=2, trials={"appendix-b": 1}))
        assert runner.run("appendix-b").trials == 1
        assert runner.run("jacobiator-td").trials == 2

    def test_suite_default_trials(self, cfg):
        runner = SuiteRunner(cfg)
        assert runner.trials_for(SUITES["gerstenhaber"]) == SUITES["gerstenhaber"].default_trials
        assert runner.trials_for(SUITES["gerstenhaber"], 7) == 7

    def test_all_aggregates(self, cfg):
        report = run_suite(ALL, cfg, trials=1)
        assert report.suite == ALL
        assert report.passed
        assert [sub.suite for sub in report.suites] == list(SUITES)
        assert report.trials == len(SUITES)
        assert '"suites"' in report.to_json()

    def test_json_omits_suites_for_single_run(self, cfg):
        assert '"suites"' not in run_suite("appendix-b", cfg, trials=1).to_json()
