"""CSV output for bound curves and simulation results.

Every file opens with '#' comment lines, the first of which is the command
that regenerates it. Floats are written in shortest round-trip form.
"""

import csv
import sys
from collections.abc import Iterable, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterator, TextIO

from raptorbound.bounds.theorems import BoundCurve
from raptorbound.montecarlo.runner import SimResult

BOUND_COLUMNS = ("delta", "raw_bound", "clamped_bound")
SIM_COLUMNS = ("delta", "trials", "failures", "rate", "ci_low", "ci_high")


def format_number(value: Any) -> str:
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@contextmanager
def open_output(out: Path | None) -> Iterator[TextIO]:
    """The file at ``out``, or stdout when it is None."""
    if out is None:
        yield sys.stdout
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as f:
        yield f


def write_table(
    stream: TextIO, header: Sequence[str], columns: Sequence[str], rows: Iterable[Sequence[Any]]
) -> None:
    for line in header:
        stream.write(f"# {line}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_number(v) for v in row])


def write_bound_csv(curve: BoundCurve, stream: TextIO, command: str) -> None:
    header = [
        command,
        f"h={curve.h} k={curve.k} q={curve.q} theorem={curve.theorem} "
        f"distribution={curve.distribution}",
    ]
    write_table(stream, header, BOUND_COLUMNS, curve.rows())


def write_sim_csv(result: SimResult, stream: TextIO, command: str) -> None:
    header = [command, f"protocol={result.protocol} seed={result.master_seed}"]
    rows = [(p.delta, p.trials, p.failures, p.rate, p.ci_low, p.ci_high) for p in result.points]
    write_table(stream, header, SIM_COLUMNS, rows)


def read_table(path: Path) -> tuple[list[str], list[dict[str, str]]]:
    """Comment lines (without '# ') and data rows of a CSV written by this module."""
    comments = []
    body = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            comments.append(line[1:].strip())
        elif line:
            body.append(line)
    return comments, list(csv.DictReader(body))
