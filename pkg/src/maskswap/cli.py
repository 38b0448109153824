"""Command-line verification driver.

Exit codes: 0 when every scenario verifies, 1 on verification failures,
2 on usage or input errors.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .errors import MaskSwapError, ScenarioFormatError
from .report import VerificationReport, render_text
from .runner import run_suite
from .scenarios import (
    SUITES,
    enumerate_scenarios,
    load_scenarios,
    parse_scenario,
    scenario_document,
)

EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(report: VerificationReport, fmt: str, out: str | None) -> None:
    text = report.to_json() if fmt == "structured" else render_text(report)
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


def _finish(report: VerificationReport, fmt: str, out: str | None) -> None:
    _emit(report, fmt, out)
    sys.exit(0 if report.overall else EXIT_FAIL)


@click.group()
def cli():
    """Verify entanglement-swapping closed forms against a brute-force oracle."""


@cli.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="Global tolerance override.")
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
              default="text", show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the report to a file instead of stdout.")
def verify(path, tol, fmt, out):
    """Run every scenario in a file or directory of files."""
    try:
        specs = load_scenarios(path)
    except ScenarioFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    for spec in specs:
        spec.tol = tol
    _finish(run_suite(specs, tolerance=tol), fmt, out)


@cli.command()
@click.argument("name", type=click.Choice(sorted(SUITES)))
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--tol", type=float, default=1e-9, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
              default="text", show_default=True)
@click.option("--out", type=click.Path(), default=None)
def suite(name, seed, tol, fmt, out):
    """Run a built-in scenario suite."""
    specs = [parse_scenario(obj) for obj in SUITES[name](seed)]
    for spec in specs:
        spec.tol = tol
    _finish(run_suite(specs, tolerance=tol, seed=seed), fmt, out)


@cli.command()
@click.argument("family")
@click.option("--d-max", type=int, default=3, show_default=True)
@click.option("--n-max", type=int, default=2, show_default=True)
@click.option("--m-max", type=int, default=3, show_default=True)
@click.option("--count", type=int, default=50, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(), default=None,
              help="Write the scenario file here instead of stdout.")
def enumerate(family, d_max, n_max, m_max, count, seed, out):
    """Enumerate scenarios for a family as a scenario file."""
    try:
        scenarios = enumerate_scenarios(
            family, d_max=d_max, n_max=n_max, m_max=m_max, count=count, seed=seed
        )
    except MaskSwapError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    text = json.dumps(scenario_document(scenarios), indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


@cli.command()
@click.argument("path", type=click.Path(exists=True))
@click.option("--format", "fmt", type=click.Choice(["text", "structured"]),
              default="text", show_default=True)
def report(path, fmt):
    """Re-render a structured report file."""
    try:
        rep = VerificationReport.from_json(Path(path).read_text())
    except ScenarioFormatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_USAGE)
    _finish(rep, fmt, None)


def main():
    cli(prog_name="maskswap")


if __name__ == "__main__":
    main()
