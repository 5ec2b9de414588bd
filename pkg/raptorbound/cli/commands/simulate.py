"""Simulate command: Monte Carlo failure rates with a run manifest."""

import logging
import time
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from raptorbound.cli.common import (
    CONFIG_OPTION,
    DELTA_OPTION,
    DIST_OPTION,
    FIELD_OPTION,
    OUT_OPTION,
    OUTER_OPTION,
    SEED_OPTION,
    distribution_of,
    fail,
    field_of,
    load_spec,
    out_path,
    resolve_code,
)
from raptorbound.core.config import find_config_file
from raptorbound.core.errors import RaptorBoundError
from raptorbound.core.metadata import create_manifest, save_manifest
from raptorbound.core.models import OuterKind
from raptorbound.montecarlo.runner import run_ensemble, run_fixed_code
from raptorbound.storage.results import open_output, write_sim_csv

logger = logging.getLogger(__name__)
console = Console(stderr=True)


def simulate(
    config: Optional[str] = CONFIG_OPTION,
    field: Optional[int] = FIELD_OPTION,
    outer: Optional[str] = OUTER_OPTION,
    dist: Optional[str] = DIST_OPTION,
    delta: Optional[str] = DELTA_OPTION,
    seed: Optional[int] = SEED_OPTION,
    target_errors: Optional[int] = typer.Option(
        None, "--target-errors", help="Failures to collect per overhead (fixed code)"
    ),
    max_trials: Optional[int] = typer.Option(None, "--max-trials", help="Trial cap per overhead"),
    codes: Optional[int] = typer.Option(None, "--codes", help="Ensemble size (uniform:h:k)"),
    trials_per_code: Optional[int] = typer.Option(
        None, "--trials-per-code", help="Decoding attempts per ensemble code and overhead"
    ),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    out: Optional[str] = OUT_OPTION,
) -> None:
    """Estimate decoding failure rates.

    Writes (delta, trials, failures, rate, ci_low, ci_high) as CSV. With
    --out, a run manifest is saved next to the CSV.
    """
    spec = load_spec(
        config,
        field=field,
        outer=outer,
        dist=dist,
        delta=delta,
        seed=seed,
        target_errors=target_errors,
        max_trials=max_trials,
        codes=codes,
        trials_per_code=trials_per_code,
        workers=workers,
        out=out,
    )
    started = time.perf_counter()
    try:
        f = field_of(spec)
        selector = spec.require_outer()
        distribution = distribution_of(spec)
        if selector.kind is OuterKind.UNIFORM:
            assert selector.h is not None and selector.k is not None
            cfg = spec.sim_config(ensemble=True)
            result = run_ensemble(selector.h, selector.k, f, distribution, cfg, spec.workers)
        else:
            code = resolve_code(spec, f)
            result = run_fixed_code(code, distribution, spec.sim_config(), spec.workers)

        command = spec.to_command("simulate")
        destination = out_path(spec)
        with open_output(destination) as stream:
            write_sim_csv(result, stream, command)
    except RaptorBoundError as e:
        fail(str(e))

    if destination is None:
        logger.info("No --out given; run manifest not written")
        return
    manifest = create_manifest(
        command=command,
        config=spec.model_dump(mode="json"),
        master_seed=spec.seed,
        workers=spec.workers,
        wall_time_s=time.perf_counter() - started,
        code_hashes=result.code_hashes,
        censored_deltas=result.censored,
        config_path=find_config_file(config),
    )
    path = save_manifest(manifest, destination)
    console.print(f"[green]Wrote[/green] {destination} and {Path(path).name}")
