"""
Multi-Dirac Engine: Structured Logging
Console (rich) + optional rotating file logs with separate loggers per subsystem.
"""

from __future__ import annotations

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from core.config import get_settings

ROOT_LOGGER = "mdx"


def setup_logging(level: Optional[str] = None, log_dir: Optional[Path] = None) -> None:
    """
    Initialize the logging system. Only the CLI calls this.

    Loggers:
        mdx          root logger
        mdx.algebra  polynomial and exterior calculus
        mdx.engine   graded Courant, multi-Dirac, multi-Poisson
        mdx.harness  generators, suites, runner
        mdx.dsl      parser and evaluator
    """
    settings = get_settings()
    log_level = (level or settings.logging.level).upper()

    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(getattr(logging, log_level, logging.WARNING))
    for handler in list(root.handlers):
        root.removeHandler(handler)
    root.propagate = False

    # Console handler (stderr, so stdout stays clean for --json)
    console = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        log_time_format="%H:%M:%S",
    )
    console.setFormatter(logging.Formatter("%(name)-18s │ %(message)s"))
    root.addHandler(console)

    target = log_dir or (Path(settings.logging.log_dir) if settings.logging.log_dir else None)
    if target is not None:
        target.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            target / "mdx.log",
            maxBytes=settings.logging.max_file_size_mb * 1024 * 1024,
            backupCount=settings.logging.backup_count,
            encoding="utf-8",
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            "%(asctime)s │ %(levelname)-7s │ %(name)-25s │ %(funcName)s:%(lineno)d │ %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        ))
        root.addHandler(file_handler)

    root.debug("Logging initialized: level=%s, dir=%s", log_level, target)


def get_logger(name: str) -> logging.Logger:
    """
    Get a namespaced logger.

    Usage:
        logger = get_logger("engine.multidirac")  -> mdx.engine.multidirac
    """
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")
