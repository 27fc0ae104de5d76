"""
Multi-Dirac Engine: Suite Runner
=================================
Runs identity suites trial by trial and collects a SuiteReport. Each trial
seeds its own generator from (seed, trial), so a run is reproducible from
the seed alone; only the first counterexample per identity is kept.

Usage:
    runner = SuiteRunner(cfg)
    report = runner.run("gerstenhaber")
    print(report.summary())
"""

from __future__ import annotations

import contextlib
import logging
import time
from typing import Optional

from algebra.exterior import schouten_sign_flip
from core.config import GeneratorConfig, SuitesConfig
from core.exceptions import UnknownSuiteError
from core.models import IdentityOutcome, SuiteReport, TrialFailure
from harness.generators import RandomSource
from harness.suites import ALL, SUITES, Suite, suite_names

logger = logging.getLogger("mdx.harness.runner")


class SuiteRunner:
    """Deterministic suite execution for one generator configuration."""

    def __init__(
        self,
        cfg: Optional[GeneratorConfig] = None,
        suites_cfg: Optional[SuitesConfig] = None,
        flip_schouten_sign: bool = False,
    ):
        self.cfg = cfg or GeneratorConfig()
        self.suites_cfg = suites_cfg or SuitesConfig()
        self.flip_schouten_sign = flip_schouten_sign

    def trials_for(self, suite: Suite, override: Optional[int] = None) -> int:
        if override is not None:
            return override
        return self.suites_cfg.trials_for(suite.name, suite.default_trials)

    def run(self, name: str, trials: Optional[int] = None) -> SuiteReport:
        if name == ALL:
            return self._run_all(trials)
        suite = SUITES.get(name)
        if suite is None:
            raise UnknownSuiteError(name, suite_names())
        mutation = schouten_sign_flip() if self.flip_schouten_sign else contextlib.nullcontext()
        with mutation:
            return self._run_suite(suite, self.trials_for(suite, trials))

    def _run_suite(self, suite: Suite, trials: int) -> SuiteReport:
        logger.info("Suite %s: %d trials, seed %d", suite.name, trials, self.cfg.seed)
        started = time.perf_counter()
        outcomes: dict[str, IdentityOutcome] = {name: IdentityOutcome(name=name) for name in suite.identities}
        failures: list[TrialFailure] = []

        for trial in range(trials):
            for check in suite.trial(RandomSource(self.cfg, trial)):
                outcome = outcomes.setdefault(check.identity, IdentityOutcome(name=check.identity))
                outcome.checks += 1
                if check.passed or not outcome.passed:
                    continue
                failure = TrialFailure(
                    trial=trial,
                    identity=check.identity,
                    inputs=check.rendered_inputs(),
                    defect=check.rendered_defect(),
                )
                outcome.passed = False
                outcome.counterexample = failure
                failures.append(failure)
                logger.warning("%s: %s fails at trial %d: %s", suite.name, check.identity, trial, failure.defect)

        millis = int((time.perf_counter() - started) * 1000)
        passed = not failures
        logger.info("Suite %s %s in %d ms", suite.name, "passed" if passed else "FAILED", millis)
        return SuiteReport(
            suite=suite.name,
            description=suite.description,
            seed=self.cfg.seed,
            trials=trials,
            passed=passed,
            identities=list(outcomes.values()),
            failures=failures,
            millis=millis,
        )

    def _run_all(self, trials: Optional[int]) -> SuiteReport:
        started = time.perf_counter()
        reports = [self.run(name, trials) for name in SUITES]
        failures = [f for report in reports for f in report.failures]
        return SuiteReport(
            suite=ALL,
            description="Every identity suite",
            seed=self.cfg.seed,
            trials=sum(r.trials for r in reports),
            passed=all(r.passed for r in reports),
            failures=failures,
            millis=int((time.perf_counter() - started) * 1000),
            suites=reports,
        )


def run_suite(
    name: str,
    cfg: Optional[GeneratorConfig] = None,
    trials: Optional[int] = None,
    suites_cfg: Optional[SuitesConfig] = None,
    flip_schouten_sign: bool = False,
) -> SuiteReport:
    """Run one suite (or `all`) deterministically from cfg.seed."""
    return SuiteRunner(cfg, suites_cfg, flip_schouten_sign).run(name, trials)
