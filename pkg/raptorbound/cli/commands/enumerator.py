"""Enumerator command: write the weight enumerator of an outer code."""

from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from raptorbound.cli.common import (
    CONFIG_OPTION,
    FIELD_OPTION,
    OUT_OPTION,
    OUTER_OPTION,
    fail,
    field_of,
    load_spec,
    out_path,
    resolve_enumerator,
)
from raptorbound.core.errors import RaptorBoundError
from raptorbound.storage.formats import write_enumerator
from raptorbound.storage.results import format_number, open_output

console = Console(stderr=True)


def enumerator(
    config: Optional[str] = CONFIG_OPTION,
    field: Optional[int] = FIELD_OPTION,
    outer: Optional[str] = OUTER_OPTION,
    out: Optional[str] = OUT_OPTION,
    show: bool = typer.Option(False, "--show", help="Also print nonzero multiplicities as a table"),
) -> None:
    """Write A_0..A_h as CSV (exact for deterministic codes, expected for ensembles)."""
    spec = load_spec(config, field=field, outer=outer, out=out)
    try:
        we = resolve_enumerator(spec, field_of(spec)).enumerator
        command = f"raptorbound enumerator --field {spec.field} --outer {spec.require_outer()}"
        with open_output(out_path(spec)) as stream:
            write_enumerator(we, stream, [command])
    except RaptorBoundError as e:
        fail(str(e))

    if show:
        table = Table(title=f"Weight enumerator ({we.kind.value}), h={we.h}, q={we.q}")
        table.add_column("l", justify="right")
        table.add_column("A_l", justify="right")
        values = we.exact if we.exact is not None else we.values
        for l, value in enumerate(values):
            if value:
                table.add_row(str(l), format_number(value))
        console.print(table)
