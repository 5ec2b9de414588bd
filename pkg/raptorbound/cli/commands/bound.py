"""Bound command: failure-probability upper bounds per overhead."""

from typing import Optional

import typer

from raptorbound.bounds.theorems import bound_curve
from raptorbound.cli.common import (
    CONFIG_OPTION,
    DELTA_OPTION,
    DIST_OPTION,
    FIELD_OPTION,
    OUT_OPTION,
    OUTER_OPTION,
    distribution_of,
    fail,
    field_of,
    load_spec,
    out_path,
    resolve_enumerator,
)
from raptorbound.core.errors import RaptorBoundError
from raptorbound.storage.results import open_output, write_bound_csv


def bound(
    config: Optional[str] = CONFIG_OPTION,
    field: Optional[int] = FIELD_OPTION,
    outer: Optional[str] = OUTER_OPTION,
    dist: Optional[str] = DIST_OPTION,
    delta: Optional[str] = DELTA_OPTION,
    theorem: Optional[int] = typer.Option(
        None,
        "--theorem",
        "-t",
        help="1 or 2 for deterministic outer codes (default: 1 over GF(2), 2 otherwise)",
    ),
    out: Optional[str] = OUT_OPTION,
) -> None:
    """Write (delta, raw_bound, clamped_bound) rows as CSV.

    Deterministic outer codes use the weight-enumerator bound, uniform
    ensembles the ensemble-average bound and unrestricted:k the plain LT bound.
    """
    spec = load_spec(
        config, field=field, outer=outer, dist=dist, delta=delta, theorem=theorem, out=out
    )
    try:
        f = field_of(spec)
        inputs = resolve_enumerator(spec, f)
        curve = bound_curve(
            inputs.enumerator,
            inputs.k,
            spec.delta.values(),
            inputs.h,
            distribution_of(spec),
            f,
            inputs.theorem,
        )
        with open_output(out_path(spec)) as stream:
            write_bound_csv(curve, stream, spec.to_command("bound"))
    except RaptorBoundError as e:
        fail(str(e))
