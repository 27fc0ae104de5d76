"""
Multi-Dirac Engine: Command Line
=================================
The `mdx` console script.

    mdx eval scripts/courant.mdx          run a script, print its print/assert results
    mdx check gerstenhaber --seed 7       run an identity suite (or `all`)
    mdx check all --json                  machine-readable report on stdout
    mdx repl                              statement-by-statement evaluation
    mdx suites                            list the identity suites
    mdx fmt scripts/courant.mdx           print a script in canonical form

Exit codes: 0 pass, 1 identity or assert failure, 2 parse/structural error,
3 unsupported input.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from core.config import GeneratorConfig, Settings, load_settings
from core.exceptions import ConfigError, MdxError, StructuralError, UnsupportedInputError
from core.logger import setup_logging
from core.models import ExitCode
from dsl.evaluator import Evaluator, Outcome
from dsl.parser import check_names, parse
from dsl.syntax import format_script
from harness.runner import SuiteRunner
from harness.suites import ALL, SUITES
from reports.suite_report import render_report, save_report

logger = logging.getLogger("mdx.harness.cli")

PROMPT = "mdx> "
CONTINUATION = "...> "
_COMMENT = re.compile(r"#[^\n]*")


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mdx", description="Exact multi-Dirac and multi-Poisson calculus")
    parser.add_argument("--config", type=Path, default=None, help="settings YAML (default: config/settings.yaml)")
    parser.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a .mdx script")
    ev.add_argument("script", type=Path)

    check = sub.add_parser("check", help="run an identity suite")
    check.add_argument("suite", help=f"suite id or '{ALL}'")
    check.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                       help="64-bit seed (default: MDX_SEED, then settings)")
    check.add_argument("--trials", type=int, default=None)
    check.add_argument("--dim", type=int, default=None, help="chart dimension (1..6)")
    check.add_argument("--ambient", type=int, default=None, help="ambient degree n")
    check.add_argument("--max-poly-degree", type=int, default=None, help="coefficient degree bound (0..2)")
    check.add_argument("--max-terms", type=int, default=None, help="terms per coefficient (1..3)")
    check.add_argument("--json", action="store_true", help="print the JSON report on stdout")
    check.add_argument("--output", type=Path, default=None, help="also save the JSON report here")
    check.add_argument("--mutate-schouten", action="store_true", help=argparse.SUPPRESS)

    sub.add_parser("repl", help="interactive evaluation")
    sub.add_parser("suites", help="list the identity suites")

    fmt = sub.add_parser("fmt", help="print a script in canonical form")
    fmt.add_argument("script", type=Path)
    return parser


def generator_config(settings: Settings, args: argparse.Namespace) -> GeneratorConfig:
    """Settings (with MDX_SEED already applied) overridden by the command-line flags."""
    base = settings.generator
    overrides = {
        "seed": args.seed,
        "dimension": args.dim,
        "ambient": args.ambient,
        "max_poly_degree": args.max_poly_degree,
        "max_terms": args.max_terms,
    }
    values = base.model_dump()
    values.update({k: v for k, v in overrides.items() if v is not None})
    if args.ambient is None:
        values["ambient"] = min(values["ambient"], values["dimension"])
    try:
        return GeneratorConfig(**values)
    except ValidationError as e:
        raise ConfigError(f"Invalid generator options: {e}") from e


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _print_outcome(console: Console, outcome: Outcome) -> None:
    if outcome.kind == "print":
        console.print(outcome.text, markup=False, highlight=False)
    elif outcome.passed:
        console.print(f"[green]✓[/green] line {outcome.line}: {escape(outcome.source)}", highlight=False)
    else:
        console.print(f"[bold red]✗ line {outcome.line}[/bold red]", highlight=False)
        console.print(outcome.text, markup=False, highlight=False)


def cmd_eval(args: argparse.Namespace, console: Console) -> int:
    source = _read_script(args.script)
    script = parse(source)
    check_names(script)
    failed = 0
    for outcome in Evaluator().run(script):
        _print_outcome(console, outcome)
        failed += not outcome.passed
    if failed:
        logger.warning("%s: %d assertion(s) failed", args.script, failed)
        return ExitCode.IDENTITY_FAILURE
    return ExitCode.OK


def cmd_check(args: argparse.Namespace, settings: Settings, console: Console) -> int:
    cfg = generator_config(settings, args)
    flip = args.mutate_schouten or settings.debug.flip_schouten_sign
    if flip:
        logger.warning("Schouten sign mutation is ON; suites are expected to fail")
    report = SuiteRunner(cfg, settings.suites, flip).run(args.suite, args.trials)
    if args.output is not None:
        save_report(report, args.output)
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        render_report(report, console, verbose=args.verbose)
    return ExitCode.OK if report.passed else ExitCode.IDENTITY_FAILURE


def cmd_suites(console: Console) -> int:
    table = Table(title="Identity suites")
    table.add_column("Suite", style="cyan", no_wrap=True)
    table.add_column("Trials", justify="right")
    table.add_column("Checks")
    for name, suite in SUITES.items():
        table.add_row(name, str(suite.default_trials), suite.description)
    console.print(table)
    return ExitCode.OK


def cmd_fmt(args: argparse.Namespace) -> int:
    sys.stdout.write(format_script(parse(_read_script(args.script))))
    return ExitCode.OK


def statement_complete(buffer: str) -> bool:
    """A buffer is complete when it ends in ';' outside any parentheses."""
    text = _COMMENT.sub("", buffer).strip()
    return text.endswith(";") and text.count("(") <= text.count(")")


def cmd_repl(console: Console, stream=None) -> int:
    """Read until a statement ends with ';', then evaluate it; errors are reported and the session goes on."""
    evaluator = Evaluator()
    read = (lambda prompt: _read_line(stream)) if stream is not None else console.input
    buffer = ""
    console.print("[dim]mdx repl: end statements with ';', Ctrl-D to quit[/dim]")
    while True:
        try:
            line = read(CONTINUATION if buffer else PROMPT)
        except (EOFError, KeyboardInterrupt):
            console.print()
            return ExitCode.OK
        if not buffer and line.strip() in (":quit", ":q"):
            return ExitCode.OK
        buffer += line + "\n"
        if not statement_complete(buffer):
            continue
        source, buffer = buffer, ""
        try:
            script = parse(source)
            chart = evaluator.chart.variable_names if evaluator.chart is not None else None
            check_names(script, chart=chart, bound=evaluator.bindings)
            for outcome in evaluator.run(script):
                _print_outcome(console, outcome)
        except MdxError as e:
            console.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)


def _read_line(stream) -> str:
    line = stream.readline()
    if not line:
        raise EOFError
    return line.rstrip("\n")


def _read_script(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise StructuralError(f"Cannot read script {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise StructuralError(f"Cannot read script {path}: not valid UTF-8 at byte {e.start}") from e


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    console = Console()
    errors = Console(stderr=True)
    try:
        settings = load_settings(args.config)
        setup_logging("DEBUG" if args.verbose else None)
        if args.command == "eval":
            return int(cmd_eval(args, console))
        if args.command == "check":
            return int(cmd_check(args, settings, console))
        if args.command == "repl":
            return int(cmd_repl(console))
        if args.command == "suites":
            return int(cmd_suites(console))
        return int(cmd_fmt(args))
    except UnsupportedInputError as e:
        errors.print(f"[yellow]unsupported:[/yellow] {escape(str(e))}", highlight=False)
        return int(ExitCode.UNSUPPORTED)
    except MdxError as e:
        errors.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        for note in getattr(e, "__notes__", ()):
            errors.print(f"  {note}", markup=False, highlight=False)
        return int(ExitCode.STRUCTURAL)


if __name__ == "__main__":
    sys.exit(main())
