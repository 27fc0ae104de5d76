"""
Multi-Dirac Engine: Core Data Models
Enums and report models shared by the harness, the CLI and the reports package.
"""

from __future__ import annotations

import json
from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


# ---------------------------------------------------------------------------
# Enums
# ---------------------------------------------------------------------------

class ObjectKind(str, Enum):
    """Random objects the generators can produce."""
    POLYNOMIAL = "polynomial"
    MULTIVECTOR = "multivector"
    FORM = "form"
    GRADED_PAIR = "graded_pair"
    CLOSED_FORM = "closed_form"
    ADMISSIBLE = "admissible"


class SuiteId(str, Enum):
    SCHOUTEN_AXIOMS = "schouten-axioms"
    LIE_DERIVATIVE_IDENTITIES = "prop-a3"
    PAIRING_SYMMETRY = "pairing-symmetry"
    GAUGE_AUTOMORPHISM = "gauge-automorphism"
    GRAPH_ISOTROPY = "graph-isotropy"
    DIRCOURANT_SIMPLIFY = "dircourant-simplify"
    TD_CROSS_ORACLE = "td-cross-oracle"
    JACOBIATOR_TD = "jacobiator-td"
    GERSTENHABER = "gerstenhaber"
    TENSOR_SYMMETRY = "appendix-b"
    POISSON_ANTICOMM = "poisson-anticomm"
    POISSON_WELLDEF = "poisson-welldef"
    POISSON_JACOBI = "poisson-jacobi"
    COURANT_DEGREE1 = "courant-degree1"
    OMEGA_D_ANTISYM = "omega-d-antisym"
    ALL = "all"


class ExitCode(int, Enum):
    OK = 0
    IDENTITY_FAILURE = 1
    STRUCTURAL = 2
    UNSUPPORTED = 3


# ---------------------------------------------------------------------------
# Suite reports
# ---------------------------------------------------------------------------

class TrialFailure(BaseModel):
    """First counterexample of a failing identity, printed exactly."""
    trial: int
    identity: str
    inputs: dict[str, str] = Field(default_factory=dict)
    defect: str


class IdentityOutcome(BaseModel):
    name: str
    checks: int = 0
    passed: bool = True
    counterexample: Optional[TrialFailure] = None


class SuiteReport(BaseModel):
    """Outcome of one suite run (or of `all`, with sub-reports in `suites`)."""
    suite: str
    description: str = ""
    seed: int
    trials: int
    passed: bool
    identities: list[IdentityOutcome] = Field(default_factory=list)
    failures: list[TrialFailure] = Field(default_factory=list)
    millis: int = 0
    suites: list["SuiteReport"] = Field(default_factory=list)

    def to_json(self) -> str:
        payload = self.model_dump(mode="json", exclude={"description"})
        if not self.suites:
            payload.pop("suites")
        return json.dumps(payload, indent=2)

    def without_timing(self) -> dict:
        """Report content minus wall time, for determinism checks."""
        data = self.model_dump(mode="json")
        data.pop("millis")
        for sub in data.get("suites", []):
            sub.pop("millis")
        return data

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            "=" * 60,
            f"  SUITE: {self.suite}   [{status}]",
            "=" * 60,
            f"  Seed:        {self.seed}",
            f"  Trials:      {self.trials}",
            f"  Wall time:   {self.millis} ms",
        ]
        reports = self.suites or [self]
        for report in reports:
            if self.suites:
                lines.append(f"  {report.suite}: {'PASS' if report.passed else 'FAIL'}")
            for outcome in report.identities:
                mark = "ok" if outcome.passed else "FAILED"
                lines.append(f"    {outcome.name:<40} {outcome.checks:>5} checks  {mark}")
        for failure in self.failures:
            lines.append("-" * 60)
            lines.append(f"  {failure.identity} (trial {failure.trial})")
            for key, value in failure.inputs.items():
                lines.append(f"    {key} = {value}")
            lines.append(f"    defect = {failure.defect}")
        lines.append("=" * 60)
        return "\n".join(lines)
