"""Init command: write a sample experiment configuration."""

from pathlib import Path

import typer
from rich.console import Console
from rich.prompt import Confirm

from raptorbound.core.config import CONFIG_NAMES, create_sample_config

console = Console()


def init(
    force: bool = typer.Option(
        False,
        "--force",
        "-f",
        help="Overwrite an existing configuration file",
    ),
) -> None:
    """Create raptorbound.yaml in the current directory."""
    config_path = Path.cwd() / CONFIG_NAMES[0]

    if config_path.exists() and not force:
        if not Confirm.ask(f"[yellow]{config_path.name} already exists. Overwrite?[/yellow]"):
            console.print("Aborted.")
            raise typer.Exit(0)

    config_path.write_text(create_sample_config())
    console.print(f"[green]Created:[/green] {config_path}")
    console.print("\nEdit the file, then run e.g. [bold]raptorbound bound[/bold].")
