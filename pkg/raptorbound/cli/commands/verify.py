"""Verify command: run the cross-oracle suite."""

import typer
from rich.console import Console
from rich.table import Table

from raptorbound.checks.suite import run_checks
from raptorbound.cli.common import EXIT_VERIFY, fail
from raptorbound.core.errors import VerificationError

console = Console()


def verify(
    instances: int = typer.Option(
        200, "--instances", "-n", min=1, help="Random decoder instances per field"
    ),
    seed: int = typer.Option(
        0, "--seed", "-s", min=0, help="Seed for the random decoder instances"
    ),
) -> None:
    """Check independent implementations against each other.

    Exits with status 2 when any check fails.
    """
    results = run_checks(instances=instances, seed=seed)

    table = Table(title="Consistency checks")
    table.add_column("Check", style="cyan")
    table.add_column("Status")
    table.add_column("Max deviation", justify="right")
    table.add_column("Detail", style="dim")
    for r in results:
        status = "[green]pass[/green]" if r.passed else "[red]FAIL[/red]"
        table.add_row(r.name, status, f"{r.max_deviation:.3e}", r.detail)
    console.print(table)

    failed = [r.name for r in results if not r.passed]
    if failed:
        fail(str(VerificationError(failed)), EXIT_VERIFY)
    console.print("[green]All checks passed.[/green]")
