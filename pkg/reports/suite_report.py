"""
Multi-Dirac Engine: Suite Report Rendering
===========================================
Renders SuiteReports for people (rich tables on the console) and machines
(JSON, optionally saved under storage/reports/).

Usage:
    render_report(report, Console())
    path = save_report(report)
"""

from __future__ import annotations

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from core.config import STORAGE_DIR
from core.models import SuiteReport, TrialFailure

logger = logging.getLogger("mdx.reports.suite_report")

REPORTS_DIR = STORAGE_DIR / "reports"


# =============================================================================
# Console rendering
# =============================================================================

def _status(passed: bool) -> Text:
    return Text("PASS", style="bold green") if passed else Text("FAIL", style="bold red")


def identity_table(report: SuiteReport) -> Table:
    table = Table(title=f"{report.suite}  ·  seed {report.seed}  ·  {report.trials} trials  ·  {report.millis} ms")
    table.add_column("Identity", style="cyan", no_wrap=True)
    table.add_column("Checks", justify="right")
    table.add_column("Result", justify="center")
    for outcome in report.identities:
        table.add_row(outcome.name, str(outcome.checks), _status(outcome.passed))
    return table


def overview_table(report: SuiteReport) -> Table:
    """One row per sub-suite of an `all` run."""
    table = Table(title=f"all  ·  seed {report.seed}  ·  {report.millis} ms")
    table.add_column("Suite", style="cyan", no_wrap=True)
    table.add_column("Trials", justify="right")
    table.add_column("Identities", justify="right")
    table.add_column("Time (ms)", justify="right")
    table.add_column("Result", justify="center")
    for sub in report.suites:
        table.add_row(sub.suite, str(sub.trials), str(len(sub.identities)), str(sub.millis), _status(sub.passed))
    return table


def failure_panel(failure: TrialFailure, suite: str = "") -> Panel:
    body = Text()
    for key, value in failure.inputs.items():
        body.append(f"{key} = ", style="dim")
        body.append(f"{value}\n")
    body.append("defect = ", style="bold")
    body.append(failure.defect, style="red")
    title = f"{suite + ': ' if suite else ''}{failure.identity} (trial {failure.trial})"
    return Panel(body, title=title, border_style="red", expand=False)


def render_report(report: SuiteReport, console: Optional[Console] = None, verbose: bool = False) -> None:
    """Print a report; sub-suites of `all` get their own tables with --verbose."""
    console = console or Console()
    if report.suites:
        console.print(overview_table(report))
        for sub in report.suites:
            if verbose or not sub.passed:
                console.print(identity_table(sub))
            for failure in sub.failures:
                console.print(failure_panel(failure, sub.suite))
    else:
        if verbose and report.description:
            console.print(f"[dim]{report.description}[/dim]")
        console.print(identity_table(report))
        for failure in report.failures:
            console.print(failure_panel(failure))
    console.print(Text.assemble("Overall: ", _status(report.passed)))


# =============================================================================
# JSON
# =============================================================================

def save_report(report: SuiteReport, output_path: Optional[Path] = None) -> Path:
    """Write the JSON report; the path defaults to storage/reports/<suite>_<seed>_<timestamp>.json."""
    if output_path is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        output_path = REPORTS_DIR / f"{report.suite}_{report.seed}_{timestamp}.json"
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(report.to_json() + "\n", encoding="utf-8")
    logger.info("Report saved: %s", output_path)
    return output_path


def load_report(path: Path) -> SuiteReport:
    return SuiteReport.model_validate_json(path.read_text(encoding="utf-8"))
