"""Main CLI entry point for raptorbound."""

import sys

import typer
from rich.console import Console

from raptorbound import __version__
from raptorbound.cli.commands import bound, enumerator, init, sample_code, simulate, verify
from raptorbound.cli.common import EXIT_USAGE
from raptorbound.core.logging import LOG_LEVELS, setup_logging

app = typer.Typer(
    name="raptorbound",
    help="Failure-probability bounds and simulations for q-ary Raptor codes.",
)
console = Console()

# Register subcommands
app.command(name="bound")(bound.bound)
app.command(name="simulate")(simulate.simulate)
app.command(name="verify")(verify.verify)
app.command(name="enumerator")(enumerator.enumerator)
app.command(name="sample-code")(sample_code.sample_code)
app.command(name="init")(init.init)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        help="Show version and exit.",
    ),
    log_level: str = typer.Option(
        "WARNING",
        "--log-level",
        help=f"Logging level on stderr ({', '.join(LOG_LEVELS)}).",
    ),
) -> None:
    """raptorbound - ML decoding failure bounds for q-ary Raptor codes."""
    if version:
        console.print(f"raptorbound version {__version__}")
        raise typer.Exit()
    try:
        setup_logging(log_level)
    except ValueError as e:
        raise typer.BadParameter(str(e), param_hint="--log-level") from e
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())
        raise typer.Exit()


def run() -> None:
    """Console-script entry point; usage errors exit with status 1."""
    try:
        app()
    except SystemExit as e:
        # typer reports usage errors with status 2, which is reserved for failed checks
        if e.code == 2 and not isinstance(e.__context__, typer.Exit):
            sys.exit(EXIT_USAGE)
        raise


if __name__ == "__main__":
    run()
