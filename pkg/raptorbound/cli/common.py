"""Helpers shared by the raptorbound commands."""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, NoReturn

import typer
from pydantic import ValidationError
from rich.console import Console

from raptorbound.codes.distribution import DegreeDistribution, resolve_distribution
from raptorbound.codes.enumerators import (
    EnumeratorKind,
    WeightEnumerator,
    hamming_weight_enumerator,
    uniform_ensemble_weight_enumerator,
    unrestricted_weight_enumerator,
)
from raptorbound.codes.outer import (
    OuterCode,
    brute_force_weight_enumerator,
    build_hamming,
    uncoded_outer,
)
from raptorbound.core.config import load_config
from raptorbound.core.errors import RaptorBoundError, SpecError
from raptorbound.core.models import ExperimentSpec, OuterKind
from raptorbound.gf.field import FieldSpec
from raptorbound.storage.formats import load_enumerator, load_outer_code

console = Console(stderr=True)

EXIT_USAGE = 1
EXIT_VERIFY = 2


def fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(code)


def load_spec(config: str | None, **overrides: Any) -> ExperimentSpec:
    """Merge flags over the config file and defaults; exits with status 1 when invalid."""
    try:
        return load_config(config, overrides)
    except (RaptorBoundError, ValidationError) as e:
        fail(str(e))


def field_of(spec: ExperimentSpec) -> FieldSpec:
    return FieldSpec.for_degree(spec.field)


def distribution_of(spec: ExperimentSpec) -> DegreeDistribution:
    return resolve_distribution(spec.dist)


def out_path(spec: ExperimentSpec) -> Path | None:
    return Path(spec.out) if spec.out else None


def _require_binary(spec: ExperimentSpec, what: str) -> None:
    if spec.field != 1:
        raise SpecError(f"{what} is binary; use --field 1")


def _check_code_field(code: OuterCode, f: FieldSpec) -> OuterCode:
    if code.q != f.q:
        raise SpecError(f"Outer code file is over GF({code.q}) but --field selects GF({f.q})")
    return code


@dataclass
class BoundInputs:
    """Enumerator and dimensions a bound is evaluated on."""

    enumerator: WeightEnumerator
    h: int
    k: int
    theorem: int


def default_theorem(spec: ExperimentSpec, f: FieldSpec) -> int:
    if spec.theorem is not None:
        return spec.theorem
    return 1 if f.q == 2 else 2


def resolve_enumerator(spec: ExperimentSpec, f: FieldSpec) -> BoundInputs:
    """Pick the enumerator and theorem implied by the outer selector."""
    outer = spec.require_outer()
    if outer.kind is OuterKind.HAMMING:
        _require_binary(spec, "The Hamming outer code")
        assert outer.t is not None
        we = hamming_weight_enumerator(outer.t)
    elif outer.kind is OuterKind.UNIFORM:
        assert outer.h is not None and outer.k is not None
        if spec.theorem is not None:
            raise SpecError(
                "--theorem applies to deterministic outer codes; ensembles use the ensemble bound"
            )
        ensemble = uniform_ensemble_weight_enumerator(outer.h, outer.k, f)
        return BoundInputs(ensemble, outer.h, outer.k, 3)
    elif outer.kind is OuterKind.UNRESTRICTED:
        assert outer.k is not None
        we = unrestricted_weight_enumerator(outer.k, f)
        return BoundInputs(we, we.h, we.k, spec.theorem or 2)
    elif outer.kind is OuterKind.CODE:
        assert outer.path is not None
        code = _check_code_field(load_outer_code(Path(outer.path)), f)
        we = brute_force_weight_enumerator(code)
    else:
        assert outer.path is not None
        we = load_enumerator(Path(outer.path))
        if we.q != f.q:
            raise SpecError(f"Enumerator file is over GF({we.q}) but --field selects GF({f.q})")
        if we.kind is EnumeratorKind.EXPECTED:
            return BoundInputs(we, we.h, we.k, 3)
    return BoundInputs(we, we.h, we.k, default_theorem(spec, f))


def resolve_code(spec: ExperimentSpec, f: FieldSpec) -> OuterCode:
    """The fixed outer code a simulation runs on (not for ensembles)."""
    outer = spec.require_outer()
    if outer.kind is OuterKind.HAMMING:
        _require_binary(spec, "The Hamming outer code")
        assert outer.t is not None
        return build_hamming(outer.t)
    if outer.kind is OuterKind.UNRESTRICTED:
        assert outer.k is not None
        return uncoded_outer(outer.k, f)
    if outer.kind is OuterKind.CODE:
        assert outer.path is not None
        return _check_code_field(load_outer_code(Path(outer.path)), f)
    raise SpecError(f"Cannot simulate outer selector '{outer}'")


# Options shared between commands
CONFIG_OPTION = typer.Option(
    None, "--config", "-c", help="Configuration file (default: ./raptorbound.yaml)"
)
FIELD_OPTION = typer.Option(None, "--field", "-m", help="Field degree m, q = 2^m (1..16)")
OUTER_OPTION = typer.Option(
    None,
    "--outer",
    "-o",
    help="hamming:t | uniform:h:k | unrestricted:k | code:PATH | enumerator:PATH",
)
DIST_OPTION = typer.Option(None, "--dist", "-d", help="Degree distribution: r10 or a file path")
DELTA_OPTION = typer.Option(None, "--delta", help="Overhead range a..b")
OUT_OPTION = typer.Option(None, "--out", help="Output file (default: stdout)")
SEED_OPTION = typer.Option(None, "--seed", "-s", help="Master seed")
